use nalgebra::DMatrix;
use serde::Serialize;

use super::{EVAL_MAX_ORDER, ROOTS_MAX_ORDER};
use crate::{Error, Result};

/// Degree of a physicists' Hermite polynomial, `0 <= n <= 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HermiteOrder(u32);

impl HermiteOrder {
    pub fn new(n: u32) -> Result<Self> {
        if n > EVAL_MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                order: i64::from(n),
                min: 0,
                max: i64::from(EVAL_MAX_ORDER),
            });
        }
        Ok(Self(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for HermiteOrder {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        Self::new(n)
    }
}

/// The `n` real roots of `H_n`, strictly increasing and symmetric about zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootSet {
    pub n: HermiteOrder,
    pub roots: Vec<f64>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.roots.iter()
    }
}

/// `H_n(z)` by the three-term recurrence `H_{k+1} = 2z H_k - 2k H_{k-1}`.
pub fn hermite_eval(n: HermiteOrder, z: f64) -> Result<f64> {
    if !z.is_finite() {
        return Err(Error::Domain(format!("hermite_eval requires finite z, got {z}")));
    }
    Ok(hermite_pair(n.get(), z).0)
}

/// Returns `(H_n(z), H_{n-1}(z))`, with `H_{-1} = 0`.
pub(crate) fn hermite_pair(n: u32, z: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let next = 2.0 * z * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// Roots of `H_n` for `n <= 32`. `n = 0` yields an empty set.
pub fn hermite_roots(n: HermiteOrder) -> Result<RootSet> {
    if n.get() > ROOTS_MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: i64::from(n.get()),
            min: 0,
            max: i64::from(ROOTS_MAX_ORDER),
        });
    }
    Ok(RootSet {
        n,
        roots: hermite_nodes(n.get() as usize),
    })
}

/// Roots of `H_n` for any `n <= 64`: eigenvalues of the symmetric Jacobi
/// matrix, then two Newton steps with `H_n' = 2n H_{n-1}`.
pub(crate) fn hermite_nodes(n: usize) -> Vec<f64> {
    match n {
        0 => return Vec::new(),
        1 => return vec![0.0],
        _ => {}
    }

    let jacobi = DMatrix::from_fn(n, n, |i, j| {
        if i.abs_diff(j) == 1 {
            (i.max(j) as f64 / 2.0).sqrt()
        } else {
            0.0
        }
    });
    let mut roots: Vec<f64> = jacobi.symmetric_eigenvalues().iter().copied().collect();
    roots.sort_by(f64::total_cmp);

    let order = n as u32;
    for r in roots.iter_mut() {
        for _ in 0..2 {
            let (h, h_prev) = hermite_pair(order, *r);
            let deriv = 2.0 * f64::from(order) * h_prev;
            if deriv != 0.0 {
                *r -= h / deriv;
            }
        }
    }

    // enforce exact antisymmetry of the root list
    for k in 0..n / 2 {
        let mirrored = 0.5 * (roots[n - 1 - k] - roots[k]);
        roots[k] = -mirrored;
        roots[n - 1 - k] = mirrored;
    }
    if n % 2 == 1 {
        roots[n / 2] = 0.0;
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn h(n: u32, z: f64) -> f64 {
        hermite_eval(HermiteOrder::new(n).unwrap(), z).unwrap()
    }

    #[test]
    fn low_orders() {
        assert_eq!(h(0, 1.7), 1.0);
        assert_eq!(h(2, 1.0), 2.0);
        assert_eq!(h(3, 0.5), -5.0);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(HermiteOrder::new(65).is_err());
        let n = HermiteOrder::new(3).unwrap();
        assert!(hermite_eval(n, f64::NAN).is_err());
        assert!(hermite_eval(n, f64::INFINITY).is_err());
        assert!(matches!(
            hermite_roots(HermiteOrder::new(33).unwrap()),
            Err(Error::UnsupportedOrder { .. })
        ));
    }

    #[test]
    fn small_root_sets() {
        let r0 = hermite_roots(HermiteOrder::new(0).unwrap()).unwrap();
        assert!(r0.is_empty());
        let r1 = hermite_roots(HermiteOrder::new(1).unwrap()).unwrap();
        assert_eq!(r1.roots, vec![0.0]);
        let r2 = hermite_roots(HermiteOrder::new(2).unwrap()).unwrap();
        assert_relative_eq!(r2.roots[1], std::f64::consts::FRAC_1_SQRT_2, max_relative = 1e-15);
        assert_eq!(r2.roots[0], -r2.roots[1]);
        let r3 = hermite_roots(HermiteOrder::new(3).unwrap()).unwrap();
        assert_relative_eq!(r3.roots[2], 1.5f64.sqrt(), max_relative = 1e-15);
        assert_eq!(r3.roots[1], 0.0);
    }

    #[test]
    fn root_set_invariants_up_to_32() {
        for n in 1..=ROOTS_MAX_ORDER {
            let set = hermite_roots(HermiteOrder::new(n).unwrap()).unwrap();
            assert_eq!(set.len(), n as usize);
            assert!(set.roots.windows(2).all(|w| w[0] < w[1]), "n={n} not increasing");
            for k in 0..set.len() {
                assert!((set.roots[k] + set.roots[set.len() - 1 - k]).abs() <= 1e-13);
                let (val, prev) = hermite_pair(n, set.roots[k]);
                let deriv = 2.0 * f64::from(n) * prev;
                assert!(
                    val.abs() <= 1e-10 * deriv.abs().max(1.0),
                    "n={n} k={k} H={val} H'={deriv}"
                );
            }
        }
    }

    #[test]
    fn roots_up_to_64_are_polished() {
        for n in [40usize, 50, 64] {
            let roots = hermite_nodes(n);
            for &r in &roots {
                let (val, prev) = hermite_pair(n as u32, r);
                assert!(val.abs() <= 1e-10 * (2.0 * n as f64 * prev).abs());
            }
        }
    }

    #[test]
    fn parity_is_bitwise() {
        for n in 0..=EVAL_MAX_ORDER {
            for &z in &[0.1, 0.73, 2.5, 5.9] {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert_eq!(h(n, -z), sign * h(n, z));
            }
        }
    }

    proptest! {
        #[test]
        fn recurrence_consistency(z in -6.0f64..6.0, n in 1u32..=30) {
            let hp = h(n + 1, z);
            let hn = h(n, z);
            let hm = h(n - 1, z);
            let scale = hp.abs().max((2.0 * z * hn).abs()).max((2.0 * f64::from(n) * hm).abs());
            let residual = hp - 2.0 * z * hn + 2.0 * f64::from(n) * hm;
            prop_assert!(residual.abs() <= 1e-9 * scale.max(f64::MIN_POSITIVE));
        }
    }
}
