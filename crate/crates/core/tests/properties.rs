mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(ring_axioms(&a, &b, &c), Ok(()));
    }

    #[test]
    fn derivatives(a in poly(), b in poly()) {
        prop_assert_eq!(derivative_laws(&a, &b), Ok(()));
    }

    #[test]
    fn euler(p in poly()) {
        prop_assert_eq!(euler_identity(&p), Ok(()));
    }

    #[test]
    fn serialization(p in poly()) {
        prop_assert_eq!(round_trip(&p), Ok(()));
    }
}
