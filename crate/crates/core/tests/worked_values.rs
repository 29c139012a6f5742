//! Small worked values checked through the public API.

use hurwitz::center::{CenterBasis, CenterElement};
use hurwitz::characters::{character, character_table};
use hurwitz::convolution::{intertwine, Family, FamilyValue};
use hurwitz::determinant::{alpha_q_determinant, hciz_determinant};
use hurwitz::group_algebra::{class_sum, jm_element, jm_power_sum, GroupAlgebraElement};
use hurwitz::partition::{partitions_of, pochhammer_partition, Partition};
use hurwitz::perm::Permutation;
use hurwitz::scalar::{frac, int, Rational};
use hurwitz::series::{TruncSeries, Vars};
use hurwitz::symfunc::{powersum_to_schur, schur_eval, schur_to_powersum, PowerSums, SymFunc};
use hurwitz::tau::{build_tau, tau_eval};
use hurwitz::twist::{connection_coeffs, twist_eigenvalue, TwistSpec};
use hurwitz::walks::{count_walks, Constraint, WalkQuery};
use num::{One, Zero};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

#[test]
fn partition_counts_and_orders() {
    assert_eq!(partitions_of(0).unwrap(), vec![Partition::empty()]);
    let four: Vec<String> = partitions_of(4).unwrap().iter().map(|l| l.to_string()).collect();
    assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    assert_eq!(partitions_of(8).unwrap().len(), 22);
}

#[test]
fn centralizer_orders_and_hooks() {
    assert_eq!(p("2,1").z(), int(2));
    assert_eq!(p("1,1,1").z(), int(6));
    assert_eq!(p("3,3,2").z(), int(36));
    assert_eq!(p("2,1").hook_product(), int(3));
    assert_eq!(p("2,2").hook_product(), int(12));
}

#[test]
fn contents_and_pochhammer() {
    assert_eq!(p("2,1").content_sum(), 0);
    assert_eq!(p("3").content_sum(), 3);
    assert_eq!(p("4,2,1").content_sum(), 3);
    assert_eq!(pochhammer_partition(&int(3), &p("2,1")), int(24));
    assert_eq!(pochhammer_partition(&int(5), &p("3")), int(5 * 6 * 7));
}

#[test]
fn characters_small() {
    let t = character_table(2).unwrap();
    assert_eq!(t.to_json(), r#"{"n":2,"order":["2","1,1"],"chi":[[1,1],[-1,1]]}"#);
    for mu in partitions_of(5).unwrap() {
        assert_eq!(character(&p("5"), &mu).unwrap(), 1);
        let sign = if (5 - mu.len()) % 2 == 0 { 1 } else { -1 };
        assert_eq!(character(&p("1,1,1,1,1"), &mu).unwrap(), sign);
    }
}

#[test]
fn schur_powersum_changes_of_basis() {
    let s21 = schur_to_powersum(&p("2,1")).unwrap();
    assert_eq!(s21.coeff(&p("1,1,1")), frac(1, 3));
    assert_eq!(s21.coeff(&p("3")), frac(-1, 3));
    assert_eq!(s21.coeff(&p("2,1")), Rational::zero());

    let p3 = powersum_to_schur(&p("3")).unwrap();
    assert_eq!(p3.coeff(&p("3")), int(1));
    assert_eq!(p3.coeff(&p("2,1")), int(-1));
    assert_eq!(p3.coeff(&p("1,1,1")), int(1));
}

#[test]
fn products_and_evaluations() {
    let prod = SymFunc::p(p("2")).multiply(&SymFunc::p(p("1"))).unwrap();
    assert_eq!(prod.coeff(&p("2,1")), int(1));

    let x = ints(&[1, 2]);
    assert_eq!(PowerSums::new(&x).p(2), int(5));
    assert_eq!(schur_eval(&p("2,1"), &ints(&[1, 1, 1])).unwrap(), int(8));
    assert_eq!(schur_eval(&p("4"), &[frac(3, 2)]).unwrap(), frac(81, 16));
}

#[test]
fn group_algebra_conventions() {
    // (12)(23) applies (23) first: 1 -> 2, 2 -> 3, 3 -> 1.
    let a = Permutation::transposition(3, 1, 2).unwrap();
    let b = Permutation::transposition(3, 2, 3).unwrap();
    let ab = a.compose(&b);
    assert_eq!((ab.apply(1), ab.apply(2), ab.apply(3)), (2, 3, 1));

    assert_eq!(class_sum(3, &p("2,1")).unwrap().support_size(), 3);
    assert_eq!(class_sum(4, &p("3,1")).unwrap().support_size(), 8);

    let j3 = jm_element(3, 3).unwrap();
    let mut expected = GroupAlgebraElement::zero(3);
    expected.add_term(Permutation::transposition(3, 1, 3).unwrap(), int(1));
    expected.add_term(Permutation::transposition(3, 2, 3).unwrap(), int(1));
    assert_eq!(j3, expected);
    assert!(j3.project_to_classes().is_err());

    let p1 = jm_power_sum(4, 1).unwrap().project_to_classes().unwrap();
    assert_eq!(p1, CenterElement::unit(4, CenterBasis::ClassSums, p("2,1,1")).unwrap());
}

#[test]
fn class_sum_square() {
    let c = CenterElement::unit(4, CenterBasis::ClassSums, p("2,1,1")).unwrap();
    let sq = c.center_multiply(&c).unwrap();
    assert_eq!(sq.coord(&p("3,1")), int(3));
    assert_eq!(sq.coord(&p("2,2")), int(2));
    assert_eq!(sq.coord(&p("1,1,1,1")), int(6));
    assert_eq!(sq.coord(&p("2,1,1")), int(0));
    assert_eq!(sq.coord(&p("4")), int(0));
}

#[test]
fn characteristic_map_units() {
    let c = CenterElement::unit(2, CenterBasis::ClassSums, p("2")).unwrap();
    assert_eq!(c.characteristic_map().unwrap().coeff(&p("2")), frac(1, 2));
    let f = CenterElement::unit(2, CenterBasis::Idempotents, p("2")).unwrap();
    assert_eq!(f.characteristic_map().unwrap().to_schur().unwrap().coeff(&p("2")), frac(1, 2));
}

#[test]
fn walk_counts_on_three_points() {
    let count = |c| count_walks(&WalkQuery::new(p("1,1,1"), p("3"), c)).unwrap();
    assert_eq!(count(Constraint::Plain(2)), 3);
    assert_eq!(count(Constraint::WeaklyMonotone(2)), 2);
    assert_eq!(count(Constraint::StrictlyMonotone(2)), 1);
    assert_eq!(count(Constraint::Plain(0)), 0);
    assert_eq!(count_walks(&WalkQuery::new(p("3"), p("3"), Constraint::Plain(0))).unwrap(), 1);
}

#[test]
fn twist_eigenvalues_on_hook() {
    let h = twist_eigenvalue(&TwistSpec::monotone(4), &p("2,1")).unwrap();
    let vars = h.vars().clone();
    let expected = &TruncSeries::one(&vars)
        + &(&TruncSeries::monomial(&vars, &[("z", 2)], int(1))
            + &TruncSeries::monomial(&vars, &[("z", 4)], int(1)));
    assert_eq!(h, expected);

    let e = twist_eigenvalue(&TwistSpec::strict(4), &p("2,1")).unwrap();
    assert_eq!(e.coeff_of(&[("w", 0)]), int(1));
    assert_eq!(e.coeff_of(&[("w", 2)]), int(-1));
    assert_eq!(e.len(), 2);
}

#[test]
fn plain_connection_coefficient() {
    let g = connection_coeffs(&TwistSpec::plain(2), 3).unwrap();
    // Coefficient of b^2/2 is the number of two-step walks.
    let s = g.entry(&p("1,1,1"), &p("3"));
    assert_eq!(s.coeff_of(&[("b", 2)]) * int(2), int(3));
}

#[test]
fn monotone_convolution_coefficients() {
    let c = intertwine(&TwistSpec::monotone(6)).unwrap();
    let vars = Vars::new(&[("z", 6)]);
    let z = TruncSeries::var(&vars, "z");
    let one = TruncSeries::one(&vars);

    let rho0 = c.rho(0).unwrap();
    assert_eq!(rho0.shift, 0);
    assert!(rho0.series.embed(&vars).unwrap().coeff_of(&[]).is_one());

    let expected2 = (&one - &z).inverse().unwrap().try_mul(&(&one - &z.scale(&int(2))).inverse().unwrap()).unwrap();
    assert_eq!(c.rho(2).unwrap().series.embed(&vars).unwrap(), expected2);

    let expected_m2 = &one + &z;
    assert_eq!(c.rho(-2).unwrap().series.embed(&vars).unwrap(), expected_m2);
}

#[test]
fn okounkov_hook_coefficient() {
    let fam = Family::okounkov(4, 2);
    let FamilyValue::Value(v) = hurwitz::convolution::family_coeffs(&fam, &p("2,1")).unwrap() else {
        panic!("expected a value");
    };
    assert_eq!(v.coeff_of(&[("q", 3)]), int(1));
    assert_eq!(v.len(), 1);
}

#[test]
fn hciz_two_variables_matches_determinant() {
    let (a, b) = (ints(&[1, 2]), ints(&[1, 3]));
    let t = build_tau(&Family::HcizExp { z_cap: 6, n_vars: 2 }, 6).unwrap();
    let lhs = tau_eval(&t, &a, &b).unwrap();
    let rhs = hciz_determinant(2, &a, &b, 6).unwrap();
    assert_eq!(lhs.embed(rhs.vars()).unwrap(), rhs);
}

#[test]
fn alpha_q_one_variable_binomial() {
    let alpha = frac(1, 2);
    let (a, b) = (vec![int(2)], vec![frac(1, 3)]);
    let det = alpha_q_determinant(1, &alpha, &a, &b, 5).unwrap();
    // (1 - q ab)^{α-1} = Σ_k (1-α)_k/k! (ab)^k q^k.
    let ab = frac(2, 3);
    let mut coeff = Rational::one();
    for k in 0..=5u32 {
        assert_eq!(det.coeff_of(&[("q", k)]), coeff.clone(), "q^{k}");
        coeff = coeff * (int(1) - &alpha + int(k as i64)) / int(k as i64 + 1) * &ab;
    }
}
