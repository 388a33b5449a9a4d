//! Plain `i128` evaluations written directly from the definitions, used as
//! reference values by several test targets.
#![allow(dead_code)]

pub fn c(n: i128, k: i128) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn tau_ref(k: i128, r: i128) -> i128 {
    (1..).find(|&k0| k0 * c(k, r - 1) < c(k0 + 1, r)).unwrap()
}

pub fn h_ref(r: i128, k: i128, s: i128) -> i128 {
    let q = (s - k) / (k - 1);
    let t = s - k - q * (k - 1);
    let tau = tau_ref(k, r);
    let a = k + 1 + q * (2 * k - 1) + 2 * t + 1;
    if 2 * k <= tau {
        c(k + 1, r) - (k + 1) * c(k, r - 1)
    } else if 2 * t + 1 < tau {
        q * c(2 * k, r) + c(k + 1, r) - (k + 1 + q * (2 * k - 1)) * c(k, r - 1)
    } else {
        q * c(2 * k, r) + c(2 * t + 2, r) + c(k + 1, r) - a * c(k, r - 1)
    }
}

pub fn g_ref(x: i128, y: i128, z: i128, k: i128, r: i128) -> i128 {
    x * c(2 * k - 1, r) + y * c(2 * k - 2, r) + c(z, r) + c(k + 1, r)
        - (k + 1 + x * (2 * k - 2) + y * (2 * k - 3) + (z - 1)) * c(k - 1, r - 1)
}

/// `max{max_T1 g, max_T2 g - C(k-1, r-2)}` by plain nested loops.
pub fn even_offset_ref(k: i128, r: i128, s: i128) -> i128 {
    let mut best: Option<i128> = None;
    for (slack, penalty) in [(k, 0), (k - 1, c(k - 1, r - 2))] {
        for x in 0..=s {
            for y in 0..=s {
                for z in 1..=2 * k - 1 {
                    if (k - 1) * x + (k - 2) * y + (z - 1) / 2 + slack <= s {
                        let v = g_ref(x, y, z, k, r) - penalty;
                        best = Some(best.map_or(v, |b| b.max(v)));
                    }
                }
            }
        }
    }
    best.unwrap()
}
