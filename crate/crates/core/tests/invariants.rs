use proptest::prelude::*;
use rug::Float;
use xop::algebra::scalar::abs_f64;
use xop::asymptotics::limit_formula;
use xop::construct::{exceptional_polynomial, FamilyKind, FamilySpec};
use xop::roots::{all_roots, RootOptions};
use xop::{MpComplex, Partition, RatPoly, Rational};

fn c(re: f64, im: f64) -> MpComplex {
    MpComplex::with_val(256, (re, im))
}

fn poly_strategy() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, 2..=9).prop_filter("nonzero leading", |v| *v.last().unwrap() != 0 && v[0] != 0)
}

fn partition_strategy() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=3, 0..=3).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn roots_satisfy_vieta_and_conjugate_closure(coeffs in poly_strategy()) {
        let p = RatPoly::from_ints(&coeffs);
        let d = coeffs.len() - 1;
        let report = all_roots(&p, &RootOptions::default()).unwrap();
        prop_assert_eq!(report.roots.len(), d);
        let prec = report.precision_bits;
        let lead = Float::with_val(prec, coeffs[d]);
        let mut sum = MpComplex::new(prec);
        let mut prod = MpComplex::with_val(prec, 1);
        for z in &report.roots {
            sum += z;
            prod *= z;
        }
        let expected_sum = MpComplex::with_val(prec, (Float::with_val(prec, -coeffs[d - 1]) / &lead, 0));
        let sign = if d % 2 == 0 { 1 } else { -1 };
        let expected_prod = MpComplex::with_val(prec, (Float::with_val(prec, sign * coeffs[0]) / &lead, 0));
        let scale = report.roots.iter().map(abs_f64).fold(1.0, f64::max).powi(d as i32);
        prop_assert!(abs_f64(&MpComplex::with_val(prec, &sum - &expected_sum)) < 1e-30 * scale);
        prop_assert!(abs_f64(&MpComplex::with_val(prec, &prod - &expected_prod)) < 1e-30 * scale);
        for z in &report.roots {
            let conj = MpComplex::with_val(prec, z.conj_ref());
            let nearest = report
                .roots
                .iter()
                .map(|w| abs_f64(&MpComplex::with_val(prec, w - &conj)))
                .fold(f64::INFINITY, f64::min);
            prop_assert!(nearest < 1e-30 * scale);
        }
    }

    #[test]
    fn roots_have_small_backward_error(coeffs in poly_strategy()) {
        let p = RatPoly::from_ints(&coeffs);
        let report = all_roots(&p, &RootOptions::default()).unwrap();
        prop_assert!(report.max_backward_error_log2 < -100.0);
        for z in &report.roots {
            let v = p.eval_complex(z);
            let r = Float::with_val(64, z.abs_ref());
            let bound = Float::with_val(64, p.abs_eval(&r) * 1e-30f64);
            prop_assert!(Float::with_val(64, v.abs_ref()) <= bound);
        }
    }

    #[test]
    fn laguerre_limit_is_continuous_and_conjugate_symmetric(re in -5.0f64..5.0, im in 0.01f64..5.0) {
        let z = c(re, im);
        let f = limit_formula(FamilyKind::Laguerre, &z).unwrap();
        let g = limit_formula(FamilyKind::Laguerre, &c(re, im + 1e-9)).unwrap();
        prop_assert!(abs_f64(&MpComplex::with_val(256, &f - &g)) < 1e-6);
        let h = limit_formula(FamilyKind::Laguerre, &c(re, -im)).unwrap();
        prop_assert!(abs_f64(&(MpComplex::with_val(256, h.conj_ref()) - &f)) < 1e-60);
        // value squares to -ζ
        let sq = MpComplex::with_val(256, &f * &f) + &z;
        prop_assert!(abs_f64(&sq) < 1e-60);
    }

    #[test]
    fn jacobi_limit_behaves_like_zeta_at_infinity(re in -3.0f64..3.0, im in 0.05f64..3.0) {
        let z = c(re, im);
        let f = limit_formula(FamilyKind::Jacobi, &z).unwrap();
        // f² = ζ² - 1
        let lhs = MpComplex::with_val(256, &f * &f);
        let rhs = MpComplex::with_val(256, &z * &z) - 1u32;
        prop_assert!(abs_f64(&MpComplex::with_val(256, &lhs - &rhs)) < 1e-60);
        let g = limit_formula(FamilyKind::Jacobi, &c(re + 1e-9, im)).unwrap();
        prop_assert!(abs_f64(&MpComplex::with_val(256, &f - &g)) < 1e-6);
        prop_assert!(f.real().clone() * z.real().clone() >= 0);
    }

    #[test]
    fn hermite_index_set_and_degree_law(parts in partition_strategy()) {
        let lambda = Partition::new(parts).unwrap();
        let spec = FamilySpec::Hermite { lambda: lambda.clone() };
        let weight = lambda.weight() as usize;
        let missing = (0..=40u64).filter(|&n| !spec.index_set_contains(n)).count();
        prop_assert_eq!(missing, weight);
        for n in (0..=14u64).filter(|&n| spec.index_set_contains(n)) {
            let p = exceptional_polynomial(&spec, n).unwrap();
            prop_assert_eq!(p.degree(), Some(n as usize));
        }
    }

    #[test]
    fn type_three_degree_law(m in 1u32..=4, num in -9i64..=-1) {
        let alpha = Rational::from((num, 10));
        let spec = FamilySpec::LaguerreTypeIII { m, alpha };
        for n in (0..=12u64).filter(|&n| spec.index_set_contains(n)) {
            let p = exceptional_polynomial(&spec, n).unwrap();
            prop_assert_eq!(p.degree(), Some(n as usize));
        }
    }
}
