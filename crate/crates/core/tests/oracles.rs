//! Library results checked against brute-force computations that share no
//! code with the implementation beyond basic matrix arithmetic.

use gyrorep::regular::{converse_maschke, inclusion_chain, lgyr_constraint_kernel, lgyr_partition, RegularRep};
use gyrorep::rep::{projective_point_count, projective_points, ProperInvariant, DEFAULT_SEARCH_BOUND};
use gyrorep::{builtin, text, Field, GyroTable, Matrix, Scalar, Subspace};

const BUILTINS: [&str; 7] = ["g8", "klein", "trivial:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6"];

fn fields() -> [Field; 4] {
    [Field::Rationals, Field::Prime(2), Field::Prime(3), Field::Prime(5)]
}

/// `f` is in `L^gyr` iff `f(a ⊕ gyr[x,y]z) = f(a ⊕ z)` for all `a, x, y, z`,
/// so the classes are the connected components of that relation. Computed
/// here by naive relabelling, with gyrations re-derived from the table.
fn naive_classes(g: &GyroTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut class = (0..n).collect::<Vec<_>>();
    let mut changed = true;
    while changed {
        changed = false;
        for a in 0..n {
            for (x, y) in (0..n).flat_map(|x| (0..n).map(move |y| (x, y))) {
                let gyr = g.derive_gyr(x, y).unwrap();
                for z in 0..n {
                    let (u, v) = (g.op(a, gyr.apply(z)), g.op(a, z));
                    let (cx, cy) = (class[u], class[v]);
                    if cx != cy {
                        let (lo, hi) = (cx.min(cy), cx.max(cy));
                        class.iter_mut().filter(|c| **c == hi).for_each(|c| *c = lo);
                        changed = true;
                    }
                }
            }
        }
    }
    let mut reps: Vec<usize> = class.clone();
    reps.sort_unstable();
    reps.dedup();
    reps.iter().map(|&r| (0..n).filter(|&x| class[x] == r).collect()).collect()
}

#[test]
fn partition_matches_naive_closure() {
    for name in BUILTINS {
        let g = builtin(name).unwrap();
        assert_eq!(lgyr_partition(&g).classes, naive_classes(&g), "{name}");
    }
}

#[test]
fn partition_span_equals_constraint_kernel_everywhere() {
    for name in BUILTINS {
        let g = builtin(name).unwrap();
        for f in fields() {
            assert_eq!(lgyr_partition(&g).lgyr_subspace(f), lgyr_constraint_kernel(&g, f), "{name} over {f}");
        }
    }
}

#[test]
fn regular_matrices_follow_the_definition() {
    // (λ(a)f)(x) = f(⊖a ⊕ x) evaluated pointwise on L(G) and compared after
    // lifting class coordinates to functions.
    for name in BUILTINS {
        let g = builtin(name).unwrap();
        let f = Field::Rationals;
        let reg = RegularRep::new(&g, f).unwrap();
        let p = reg.partition();
        for c in 0..p.len() {
            let e: Vec<Scalar> = (0..p.len()).map(|i| if i == c { f.one() } else { f.zero() }).collect();
            let func = p.to_function(&e);
            for a in g.elements() {
                let moved: Vec<Scalar> = g.elements().map(|x| func[g.op(g.inverse(a), x)].clone()).collect();
                assert_eq!(p.to_function(&reg.rep().matrix(a).mul_vec(&e)), moved, "{name}: a = {a}");
            }
        }
    }
}

fn all_vectors(field: Field, n: usize) -> Vec<Vec<Scalar>> {
    let p = field.characteristic();
    (0..p.pow(n as u32))
        .map(|mut x| {
            (0..n)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    field.from_u64(d)
                })
                .collect()
        })
        .collect()
}

#[test]
fn projective_points_are_distinct_lines_covering_everything() {
    for (p, n) in [(2u64, 3usize), (3, 3), (5, 2)] {
        let f = Field::Prime(p);
        let points: Vec<_> = projective_points(f, n).unwrap().collect();
        assert_eq!(points.len() as u128, projective_point_count(p, n));
        let mut lines: Vec<Subspace> = points.iter().map(|v| Subspace::span(f, n, [v.clone()])).collect();
        lines.sort_by_key(|l| format!("{:?}", l.basis()));
        lines.dedup();
        assert_eq!(lines.len(), points.len());
        for v in all_vectors(f, n).into_iter().filter(|v| v.iter().any(|s| !s.is_zero())) {
            assert!(lines.iter().any(|l| l.contains(&v)));
        }
    }
}

#[test]
fn invariant_search_agrees_with_brute_force() {
    for name in ["g8", "cyclic:3", "cyclic:4", "klein"] {
        let g = builtin(name).unwrap();
        for p in [2u64, 3, 5] {
            let f = Field::Prime(p);
            let rep = RegularRep::new(&g, f).unwrap().rep().clone();
            let d = rep.degree();
            // A proper invariant subspace exists iff some nonzero vector spins
            // to a proper subspace; check by spinning every vector naively.
            let proper = all_vectors(f, d).into_iter().filter(|v| v.iter().any(|s| !s.is_zero())).any(|v| {
                let mut span = Subspace::span(f, d, [v]);
                loop {
                    let next = span
                        .sum(&Subspace::span(
                            f,
                            d,
                            rep.matrices().iter().flat_map(|m| span.vectors().map(|b| m.mul_vec(b)).collect::<Vec<_>>()),
                        ))
                        .unwrap();
                    if next == span {
                        break;
                    }
                    span = next;
                }
                span.dim() < d
            });
            let search = rep.find_proper_invariant(DEFAULT_SEARCH_BOUND).unwrap();
            match search.result {
                ProperInvariant::Found(u) => {
                    assert!(proper, "{name} mod {p}");
                    assert!(rep.is_invariant(&u).unwrap() && !u.is_zero() && !u.is_full());
                }
                ProperInvariant::NoneExists => assert!(!proper || d <= 1, "{name} mod {p}"),
                ProperInvariant::Unknown => panic!("finite search must decide"),
            }
        }
    }
}

#[test]
fn dimension_of_u_follows_class_sizes() {
    for name in BUILTINS {
        let g = builtin(name).unwrap();
        for f in fields() {
            let reg = RegularRep::new(&g, f).unwrap();
            let sizes = reg.partition().class_sizes();
            let all_vanish = sizes.iter().all(|&s| f.divides(s as u64));
            let k = sizes.len();
            let expected = if all_vanish { k } else { k - 1 };
            assert_eq!(reg.sigma_kernel().dim(), expected, "{name} over {f}");
        }
    }
}

#[test]
fn chain_for_every_builtin_and_dividing_prime() {
    for name in BUILTINS {
        let g = builtin(name).unwrap();
        for p in [2u64, 3, 5] {
            if !(g.order() as u64).is_multiple_of(p) {
                continue;
            }
            let c = inclusion_chain(&g, p).unwrap();
            assert!(c.all_hold(), "{name} mod {p}: {}", c.render());
            assert_eq!(c.inclusions[3].strict, !g.is_group());
        }
    }
}

#[test]
fn converse_certificate_is_complete_for_groups() {
    for (name, p) in [("cyclic:2", 2u64), ("cyclic:4", 2), ("klein", 2), ("cyclic:3", 3), ("cyclic:6", 3)] {
        let g = builtin(name).unwrap();
        let r = converse_maschke(&g, p).unwrap();
        assert!(r.hypothesis_holds);
        let k = r.dim_lgyr as u32;
        let outside = (p.pow(k) - p.pow(k - 1)) / (p - 1);
        assert_eq!(r.candidates_checked as u64, outside, "{name} mod {p}");
        assert!(r.complement_found.is_none());
        assert!(r.candidates.iter().all(|c| !c.invariant && c.moved_by.is_some()));
    }
}

#[test]
fn mutated_g8_table_is_rejected_with_a_line_number() {
    let g = builtin("g8").unwrap();
    let mut rows = g.cayley_rows();
    rows[1][0] = 2;
    let body: Vec<String> = rows.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
    let table = format!("8\n{}\n", body.join("\n"));
    assert!(text::parse_table(&table).is_err());
}

#[test]
fn identity_matrix_is_a_representation_of_any_builtin() {
    for name in BUILTINS {
        let g = std::sync::Arc::new(builtin(name).unwrap());
        let r = gyrorep::Representation::trivial(g, Field::Prime(7), 3);
        assert!(r.verify().is_ok());
        assert!(r.matrices().iter().all(Matrix::is_identity));
    }
}
