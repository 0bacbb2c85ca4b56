use crate::error::GyroError;
use crate::gyro::GyroTable;

/// Cayley table of the order-8 gyrogroup G8 (the smallest order of a finite
/// gyrogroup that is not a group). Row `a`, column `b` holds `a ⊕ b`.
const G8: [[usize; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 3, 0, 2, 7, 4, 5, 6],
    [2, 0, 3, 1, 5, 6, 7, 4],
    [3, 2, 1, 0, 6, 7, 4, 5],
    [4, 5, 7, 6, 3, 2, 0, 1],
    [5, 6, 4, 7, 2, 0, 1, 3],
    [6, 7, 5, 4, 0, 1, 3, 2],
    [7, 4, 6, 5, 1, 3, 2, 0],
];

/// A named built-in gyrogroup: `g8`, `cyclic:<n>` (n ≥ 1), `klein`, or
/// `trivial:1`.
pub fn builtin(name: &str) -> Result<GyroTable, GyroError> {
    let unknown = || GyroError::UnknownBuiltin(name.to_string());
    let rows: Vec<Vec<usize>> = match name {
        "g8" => G8.iter().map(|r| r.to_vec()).collect(),
        "klein" => (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect(),
        "trivial:1" => vec![vec![0]],
        _ => {
            let n: usize = name
                .strip_prefix("cyclic:")
                .and_then(|n| n.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(unknown)?;
            (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
        }
    };
    GyroTable::from_cayley(rows)
}
