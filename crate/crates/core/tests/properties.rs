//! Randomized algebraic invariants.

use hurwitz::center::{CenterBasis, CenterElement};
use hurwitz::characters::character_table;
use hurwitz::determinant::{bareiss, Poly};
use hurwitz::group_algebra::GroupAlgebraElement;
use hurwitz::oracle::{det_rational, schur_alternant};
use hurwitz::partition::{partitions_of, Partition};
use hurwitz::perm::Permutation;
use hurwitz::scalar::{factorial, frac, int, Rational};
use hurwitz::series::{TruncSeries, Vars};
use hurwitz::symfunc::{schur_eval, Basis, SymFunc};
use hurwitz::twist::{twist_eigenvalue, TwistSpec};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=5, 0..=4).prop_map(Partition::from_unsorted)
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| frac(a, b))
}

fn center_element(n: usize, basis: CenterBasis) -> impl Strategy<Value = CenterElement> {
    let parts = partitions_of(n).unwrap();
    prop::collection::vec(small_rational(), parts.len())
        .prop_map(move |cs| CenterElement::from_coords(n, basis, parts.iter().cloned().zip(cs)).unwrap())
}

fn group_element(n: usize) -> impl Strategy<Value = GroupAlgebraElement> {
    let perms = Permutation::all(n);
    let len = perms.len();
    prop::collection::vec((0..len, small_rational()), 0..=4).prop_map(move |terms| {
        let mut e = GroupAlgebraElement::zero(n);
        for (i, c) in terms {
            e.add_term(perms[i].clone(), c);
        }
        e
    })
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..=max_len).prop_map(Poly::new)
}

fn distinct_points(count: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set((-8i64..=8, 1i64..=3), count)
        .prop_map(|s| s.into_iter().map(|(a, b)| frac(a, b)).collect::<BTreeSet<_>>().into_iter().collect())
        .prop_filter("distinct values", move |v: &Vec<Rational>| v.len() == count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugation_is_an_involution(l in partition()) {
        let c = l.conjugate();
        prop_assert_eq!(c.size(), l.size());
        prop_assert_eq!(c.conjugate(), l.clone());
        prop_assert_eq!(c.content_sum(), -l.content_sum());
        prop_assert_eq!(l.content_sum(), l.content_sum_closed_form());
    }

    #[test]
    fn hook_length_formula(l in partition().prop_filter("size", |l| l.size() <= 8)) {
        let n = l.size();
        let dim = character_table(n).unwrap().dimension(&l);
        prop_assert_eq!(l.hook_product() * int(dim), factorial(n));
    }

    #[test]
    fn schur_powersum_round_trip(coeffs in prop::collection::vec(small_rational(), 7)) {
        let parts = partitions_of(5).unwrap();
        let f = SymFunc::from_terms(Basis::Schur, 5, parts.into_iter().zip(coeffs));
        let back = f.to_powersum().unwrap().to_schur().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn series_exp_ln_round_trip(cs in prop::collection::vec(small_rational(), 6)) {
        let vars = Vars::new(&[("x", 3), ("y", 2)]);
        let mut f = TruncSeries::zero(&vars);
        let monos = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 2)];
        for ((i, j), c) in monos.into_iter().zip(cs) {
            f = &f + &TruncSeries::monomial(&vars, &[("x", i), ("y", j)], c);
        }
        let e = f.exp().unwrap();
        prop_assert_eq!(e.ln().unwrap(), f.clone());
        let inv = e.inverse().unwrap();
        prop_assert_eq!(f.scale(&int(-1)).exp().unwrap(), inv);
    }

    #[test]
    fn center_basis_round_trip(v in center_element(4, CenterBasis::ClassSums)) {
        let idem = v.class_to_idem().unwrap();
        prop_assert_eq!(idem.idem_to_class().unwrap(), v);
    }

    #[test]
    fn center_product_commutes(u in center_element(4, CenterBasis::ClassSums),
                               v in center_element(4, CenterBasis::ClassSums)) {
        prop_assert_eq!(u.center_multiply(&v).unwrap(), v.center_multiply(&u).unwrap());
    }

    #[test]
    fn center_product_is_diagonal_on_idempotents(u in center_element(4, CenterBasis::Idempotents),
                                                 v in center_element(4, CenterBasis::Idempotents)) {
        let uv = u.center_multiply(&v).unwrap();
        for l in partitions_of(4).unwrap() {
            prop_assert_eq!(uv.coord(&l), u.coord(&l) * v.coord(&l));
        }
    }

    #[test]
    fn group_algebra_is_associative(a in group_element(4), b in group_element(4), c in group_element(4)) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn exact_polynomial_division(a in poly(5), b in poly(4).prop_filter("nonzero", |b| !b.is_zero())) {
        prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn bareiss_matches_rational_elimination(entries in prop::collection::vec(small_rational(), 16)) {
        let rows: Vec<Vec<Rational>> = entries.chunks(4).map(<[Rational]>::to_vec).collect();
        let polys = rows.iter().map(|r| r.iter().map(|c| Poly::constant(c.clone())).collect()).collect();
        prop_assert_eq!(bareiss(polys).unwrap().coeff(0), det_rational(rows));
    }

    #[test]
    fn schur_eval_matches_alternant(l in partition().prop_filter("size", |l| l.size() <= 7),
                                    x in distinct_points(3)) {
        prop_assert_eq!(schur_eval(&l, &x).unwrap(), schur_alternant(&l, &x).unwrap());
    }

    #[test]
    fn twist_eigenvalues_multiply_under_composition(l in partition().prop_filter("size", |l| l.size() <= 6)) {
        let a = TwistSpec::monotone(4);
        let b = TwistSpec::strict(4);
        let ab = a.compose(&b).unwrap();
        let vars = ab.vars().clone();
        let ea = twist_eigenvalue(&a, &l).unwrap().embed(&vars).unwrap();
        let eb = twist_eigenvalue(&b, &l).unwrap().embed(&vars).unwrap();
        prop_assert_eq!(twist_eigenvalue(&ab, &l).unwrap(), ea.try_mul(&eb).unwrap());
    }
}
