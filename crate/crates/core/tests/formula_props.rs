//! Properties of the closed forms, checked against a separate `i128`
//! evaluation written directly from the definitions.

use num_bigint::BigInt;
use proptest::prelude::*;
use turan_core::formulas::{ex_even, ex_even_edges, ex_odd, g_value, h_value, tau};

mod common;
use common::{c, even_offset_ref, g_ref, h_ref, tau_ref};

fn big(v: i128) -> BigInt {
    BigInt::from(v)
}

proptest! {
    #[test]
    fn tau_is_the_least_witness(k in 2u64..=10, r in 2u64..=10) {
        let t = tau(k, r).unwrap();
        prop_assert_eq!(t as i128, tau_ref(k as i128, r as i128));
        prop_assert!(t > k);
        if r == 2 {
            prop_assert_eq!(t, 2 * k);
        }
    }

    #[test]
    fn past_tau_the_gap_grows(k in 2i128..=10, r in 2i128..=10, extra in 0i128..=30, b in 0i128..=20) {
        let kp = tau_ref(k, r) + extra;
        prop_assert!(kp * c(k, r - 1) < c(kp + 1, r));
        let lhs = c(kp + b + 1, r) - (kp + b) * c(k, r - 1);
        let rhs = c(kp + 1, r) - kp * c(k, r - 1);
        prop_assert!(lhs >= rhs);
    }

    #[test]
    fn full_block_beats_its_share(k in 2i128..=12, r in 2i128..=13) {
        prop_assume!(r <= k + 1);
        prop_assert!(c(2 * k, r) - (2 * k - 1) * c(k, r - 1) >= 0);
    }

    #[test]
    fn h_matches_definition(k in 2u64..=9, r in 2u64..=10, extra in 0u64..=40) {
        prop_assume!(r <= k + 1);
        let s = 2 * k + 1 + extra;
        let (ki, ri, si) = (k as i128, r as i128, s as i128);
        let h = h_value(r, k, s).unwrap();
        prop_assert_eq!(&h, &big(h_ref(ri, ki, si)));
        prop_assert!(h >= big(c(ki + 1, ri) - (ki + 1) * c(ki, ri - 1)));
        if r == 2 {
            prop_assert_eq!(h, big(c(ki + 1, 2) - ki * (ki + 1)));
        }
        // The extra clique only pays off past the threshold.
        let q = (si - ki) / (ki - 1);
        let t = si - ki - q * (ki - 1);
        if 2 * t + 1 >= tau_ref(ki, ri) {
            prop_assert!(c(2 * t + 2, ri) - (2 * t + 1) * c(ki, ri - 1) >= 0);
        }
    }

    #[test]
    fn odd_value_is_linear_plus_h(n in 0u64..=1_000_000_000, k in 2u64..=6, r in 2u64..=7, extra in 0u64..=20) {
        prop_assume!(r <= k + 1);
        let s = 2 * k + 1 + extra;
        let Ok(v) = ex_odd(n, k, s, r) else {
            // Only the witness order can fail.
            prop_assert!(n < 4 * s);
            return Ok(());
        };
        let (ni, ki, ri, si) = (n as i128, k as i128, r as i128, s as i128);
        prop_assert_eq!(&v.value, &big(c(ki, ri - 1) * ni + h_ref(ri, ki, si)));
        if r == 2 {
            prop_assert_eq!(v.value, big(c(ki, 2) + ki * (ni - ki)));
        }
    }

    #[test]
    fn g_matches_definition(x in 0u64..=6, y in 0u64..=6, k in 2u64..=9, zf in 0.0f64..1.0, r in 2u64..=9) {
        let z = 1 + ((2 * k - 1) as f64 * zf) as u64;
        let z = z.min(2 * k - 1);
        let v = g_value(x, y, z, k, r).unwrap();
        prop_assert_eq!(v, big(g_ref(x as i128, y as i128, z as i128, k as i128, r as i128)));
    }

    #[test]
    fn even_value_matches_nested_loops(k in 3u64..=7, r in 2u64..=7, extra in 0u64..=16) {
        prop_assume!(r <= k);
        let s = k - 1 + extra;
        let n = 2000;
        let v = ex_even(n, k, s, r).unwrap();
        let (ki, ri, si) = (k as i128, r as i128, s as i128);
        prop_assert_eq!(v.value, big(c(ki - 1, ri - 1) * n as i128 + even_offset_ref(ki, ri, si)));
    }

    #[test]
    fn even_theorems_agree_on_edges(k in 3u64..=8, extra in 0u64..=30, n in 200u64..=1_000_000_000) {
        let s = k - 1 + extra;
        prop_assume!(s <= 4 * k);
        let a = ex_even(n, k, s, 2).unwrap().value;
        let b = ex_even_edges(n, k, s).unwrap().value;
        prop_assert_eq!(&a, &b);
        let (ni, ki) = (n as i128, k as i128);
        let q = s as i128 / (ki - 1);
        let eps = i128::from(s as i128 - q * (ki - 1) >= 1);
        prop_assert_eq!(a, big((ki - 1) * ni - c(ki, 2) + (ki - 1) * (q - 1) + eps));
    }
}

#[test]
fn exact_at_huge_n() {
    let n = 10u64.pow(18);
    let v = ex_odd(n, 5, 40, 6).unwrap().value;
    let expect = BigInt::from(n) * big(c(5, 5)) + big(h_ref(6, 5, 40));
    assert_eq!(v, expect);
    // Case 3: tau = 6, q = 8, t = 3, A = 85, so h = 8 * 210 + 28 + 1 - 85.
    assert_eq!(v.to_string(), "1000000000000001624");
}
