mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn divrem_reassembles(a in exact_poly(8), b in nonzero_exact_poly(5)) {
        division_identity(&a, &b)?;
    }

    #[test]
    fn derivative_of_product(f in exact_poly(6), g in exact_poly(6)) {
        product_rule(&f, &g)?;
    }

    #[test]
    fn sqrt_head_recovers_square_part((s, r) in square_pair()) {
        sqrt_head_roundtrip(&s, &r)?;
    }

    #[test]
    fn roots_are_roots(p in float_poly()) {
        root_residuals(&p)?;
    }
}
