//! Exhaustive laws of the hill quotients at small sizes: the projection is
//! an operad morphism, the three quotient compositions are conjugate under
//! the quotient basis changes, and the quotient satisfies the operad
//! axioms.

use cliff_operads::cliffs::CliffWord;
use cliff_operads::hillops::{
    project, q_compose, q_compose_e, q_compose_f, q_compose_h, q_convert, QuotientContext,
};
use cliff_operads::operad::{compose_f, Basis, OperadContext, OperadElement};

const DELTAS: [&str; 3] = ["arith:1@8", "const:2", "arith:2@8"];

fn hills(spec: &str, cap: usize) -> QuotientContext {
    let ctx = OperadContext::new(spec.parse().unwrap(), cap).unwrap();
    QuotientContext::hills(ctx).unwrap()
}

fn monomial(q: &QuotientContext, basis: Basis, w: &CliffWord) -> OperadElement {
    let e = OperadElement::monomial(q.base(), basis, w.clone()).unwrap();
    assert!(q.contains(w));
    e
}

#[test]
fn projection_is_a_morphism_up_to_size_five() {
    for spec in DELTAS {
        let q = hills(spec, 5);
        for su in 1..=4usize {
            for sv in 1..=4usize {
                if su + sv - 1 > 5 {
                    continue;
                }
                for u in q.words(su).unwrap() {
                    for v in q.words(sv).unwrap() {
                        for i in 1..=su {
                            let base = compose_f(q.base(), &u, i, &v).unwrap();
                            assert_eq!(
                                project(&q, &base).unwrap(),
                                q_compose_f(&q, &u, i, &v).unwrap(),
                                "{spec}: {u:?} o_{i} {v:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn quotient_bases_are_conjugate_up_to_size_five() {
    for spec in DELTAS {
        let q = hills(spec, 5);
        for su in 1..=4usize {
            for sv in 1..=4usize {
                if su + sv - 1 > 5 {
                    continue;
                }
                for u in q.words(su).unwrap() {
                    for v in q.words(sv).unwrap() {
                        for i in 1..=su {
                            for basis in [Basis::E, Basis::H] {
                                let direct = match basis {
                                    Basis::E => q_compose_e(&q, &u, i, &v).unwrap(),
                                    _ => q_compose_h(&q, &u, i, &v).unwrap(),
                                };
                                // Expand both operands into F, compose, and
                                // convert back.
                                let fu = q_convert(&q, &monomial(&q, basis, &u), Basis::F)
                                    .unwrap();
                                let fv = q_convert(&q, &monomial(&q, basis, &v), Basis::F)
                                    .unwrap();
                                let via_f =
                                    q_convert(&q, &q_compose(&q, &fu, i, &fv).unwrap(), basis)
                                        .unwrap();
                                assert_eq!(
                                    via_f, direct,
                                    "{spec} {basis:?}: {u:?} o_{i} {v:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn quotient_axioms_up_to_size_four() {
    for spec in DELTAS {
        let q = hills(spec, 4);
        let sizes: Vec<Vec<CliffWord>> =
            (0..=4).map(|n| if n == 0 { Vec::new() } else { q.words(n).unwrap() }).collect();
        for basis in [Basis::E, Basis::F, Basis::H] {
            // Unit laws.
            let unit = OperadElement::unit(basis);
            for n in 1..=4usize {
                for w in &sizes[n] {
                    let x = monomial(&q, basis, w);
                    assert_eq!(q_compose(&q, &unit, 1, &x).unwrap(), x);
                    for i in 1..=n {
                        assert_eq!(q_compose(&q, &x, i, &unit).unwrap(), x);
                    }
                }
            }
            // Sequential and parallel axioms with composite size within 4.
            for n1 in 1..=4usize {
                for n2 in 1..=4usize {
                    for n3 in 1..=4usize {
                        if n1 + n2 + n3 - 2 > 4 {
                            continue;
                        }
                        for u in &sizes[n1] {
                            for v in &sizes[n2] {
                                for w in &sizes[n3] {
                                    let x1 = monomial(&q, basis, u);
                                    let x2 = monomial(&q, basis, v);
                                    let x3 = monomial(&q, basis, w);
                                    for i in 1..=n1 {
                                        for j in 1..=n2 {
                                            let lhs = q_compose(
                                                &q,
                                                &q_compose(&q, &x1, i, &x2).unwrap(),
                                                i + j - 1,
                                                &x3,
                                            )
                                            .unwrap();
                                            let rhs = q_compose(
                                                &q,
                                                &x1,
                                                i,
                                                &q_compose(&q, &x2, j, &x3).unwrap(),
                                            )
                                            .unwrap();
                                            assert_eq!(lhs, rhs, "{spec} {basis:?} sequential");
                                        }
                                    }
                                    for i in 1..n1 {
                                        for j in i + 1..=n1 {
                                            let lhs = q_compose(
                                                &q,
                                                &q_compose(&q, &x1, i, &x2).unwrap(),
                                                j + n2 - 1,
                                                &x3,
                                            )
                                            .unwrap();
                                            let rhs = q_compose(
                                                &q,
                                                &q_compose(&q, &x1, j, &x3).unwrap(),
                                                i,
                                                &x2,
                                            )
                                            .unwrap();
                                            assert_eq!(lhs, rhs, "{spec} {basis:?} parallel");
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
