//! Exact arithmetic for the apex family `G_l = K_1 v (l K_t + (n-1-lt) P_1)`:
//! the optimal clique count `l_0 = floor((2n + xi_t) / 3t)`, the cubic whose
//! extreme roots are `lambda_1` and `lambda_n` of `G_l`, closed-form spreads,
//! and the exact two-way tie at `t = 4 (mod 12)`.
//!
//! All offsets and coefficients are exact integers or rationals; floating
//! point enters only at root extraction.

use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::dd::Dd;
use crate::error::{Error, Result};

/// The integer offset in `l_0 = floor((2n + xi_t)/(3t))`.
///
/// Both branches share the numerator `27t - 36 - 4(t-1)^2`:
/// even t uses `2*floor(./36)`, odd t uses `floor(./18)`.
pub fn xi(t: u64) -> Result<i64> {
    if t < 2 {
        return Err(Error::InvalidParameter("xi is defined for t >= 2".into()));
    }
    let t = t as i64;
    let num = 27 * t - 36 - 4 * (t - 1) * (t - 1);
    Ok(if t % 2 == 0 {
        2 * num.div_euclid(36)
    } else {
        num.div_euclid(18)
    })
}

/// Even-t half offset `eta_t = floor(3t/4 - 1 - (t-1)^2/9)`; satisfies
/// `xi_t = 2 eta_t`.
pub fn eta(t: u64) -> Result<i64> {
    if t < 2 || t % 2 != 0 {
        return Err(Error::InvalidParameter("eta is defined for even t >= 2".into()));
    }
    let t = t as i64;
    let num = 27 * t - 36 - 4 * (t - 1) * (t - 1);
    Ok(num.div_euclid(36))
}

/// The spread-maximizing clique count `l_0 = floor((2n + xi_t)/(3t))`.
/// Rejects parameters where `G_{l_0}` does not exist (tiny n).
pub fn ell_star(n: u64, t: u64) -> Result<u64> {
    let x = xi(t)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let l0 = (2 * n as i64 + x).div_euclid(3 * t as i64);
    if l0 < 0 || l0 as u64 * t > n - 1 {
        return Err(Error::Infeasible(format!(
            "l_0 = {l0} does not fit: l_0*t must lie in [0, n-1] for n={n}, t={t}"
        )));
    }
    Ok(l0 as u64)
}

/// Monic cubic `x^3 + c2 x^2 + c1 x + c0` with integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonicCubic {
    pub c2: i64,
    pub c1: i64,
    pub c0: i64,
}

impl MonicCubic {
    pub fn eval(&self, x: f64) -> f64 {
        ((x + self.c2 as f64) * x + self.c1 as f64) * x + self.c0 as f64
    }
}

/// The characteristic cubic of the equitable partition of `G_l`:
/// `lambda^3 - (t-1) lambda^2 - (n-1) lambda + (t-1)(n-1-lt) = 0`.
/// `lambda_1(G_l)` and `lambda_n(G_l)` are its extreme roots.
pub fn char_cubic(n: u64, t: u64, l: u64) -> Result<MonicCubic> {
    check_family(n, t, l)?;
    let (n, t, l) = (n as i64, t as i64, l as i64);
    Ok(MonicCubic {
        c2: -(t - 1),
        c1: -(n - 1),
        c0: (t - 1) * (n - 1 - l * t),
    })
}

/// `x^3 + p x + q` with exact rational coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DepressedCubic {
    pub p: Rational64,
    pub q: Rational64,
}

/// Depressed form of [`char_cubic`] under `lambda = x + (t-1)/3`:
/// `p = -(3n + t^2 - 2t - 2)/3` and
/// `q = (-27lt^2 - 2t^3 + 27lt + 18nt + 6t^2 - 18n - 24t + 20)/27`,
/// derived from the integer cubic by the exact shift (substituting back
/// reproduces it).
pub fn depressed_cubic(n: u64, t: u64, l: u64) -> Result<DepressedCubic> {
    Ok(depress(&char_cubic(n, t, l)?))
}

/// Exact shift `x = lambda + c2/3` of a monic integer cubic.
pub fn depress(cubic: &MonicCubic) -> DepressedCubic {
    let a = Rational64::from_integer(cubic.c2);
    let b = Rational64::from_integer(cubic.c1);
    let c = Rational64::from_integer(cubic.c0);
    let three = Rational64::from_integer(3);
    let p = b - a * a / three;
    let q = Rational64::new(2, 27) * a * a * a - a * b / three + c;
    DepressedCubic { p, q }
}

/// Three real roots of `x^3 + px + q`, descending, by the trigonometric
/// closed form `x_j = 2 sqrt(-p/3) cos(theta/3 - 2 pi j / 3)` with
/// `theta = arccos(3q/(2p) sqrt(-3/p))`, then polished to full f64
/// accuracy by a double-double Newton step.
///
/// Rejects cubics whose discriminant `-4p^3 - 27q^2` is negative beyond a
/// 1e-9 relative tolerance (no three real roots).
pub fn solve_depressed_cubic(cubic: &DepressedCubic) -> Result<[f64; 3]> {
    let p = ratio_to_f64(cubic.p);
    let q = ratio_to_f64(cubic.q);
    let disc = -4.0 * p * p * p - 27.0 * q * q;
    let scale = (4.0 * p.abs().powi(3)).max(27.0 * q * q).max(1.0);
    if disc < -1e-9 * scale {
        return Err(Error::NegativeDiscriminant { discriminant: disc });
    }
    if p >= 0.0 {
        // with disc >= 0 this forces p ~ q ~ 0: triple root at 0
        return Ok([0.0; 3]);
    }
    let r = 2.0 * (-p / 3.0).sqrt();
    let mut u = 3.0 * q / (2.0 * p) * (-3.0 / p).sqrt();
    if u.abs() > 1.0 {
        if u.abs() - 1.0 > 1e-12 {
            return Err(Error::NegativeDiscriminant { discriminant: disc });
        }
        u = u.clamp(-1.0, 1.0);
    }
    let theta = u.acos();
    let mut roots = [0.0f64; 3];
    for (j, root) in roots.iter_mut().enumerate() {
        let x = r * (theta / 3.0 - 2.0 * std::f64::consts::PI * j as f64 / 3.0).cos();
        *root = polish_root(cubic, x).to_f64();
    }
    roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(roots)
}

/// Largest minus smallest root of [`char_cubic`]; equals `S(G_l)` whenever
/// `l >= 1` (and at `l = 0` as long as `t - 1 <= sqrt(n-1)`, the star's
/// spectral radius dominating the shifted clique eigenvalue).
pub fn spread_exact(n: u64, t: u64, l: u64) -> Result<f64> {
    Ok(spread_exact_dd(n, t, l)?.to_f64())
}

/// Double-double spread of the family cubic, for residual work that has to
/// resolve differences far below f64 on values of size ~2 sqrt(n).
pub(crate) fn spread_exact_dd(n: u64, t: u64, l: u64) -> Result<Dd> {
    let cubic = depressed_cubic(n, t, l)?;
    let roots = solve_depressed_cubic(&cubic)?;
    let hi = polish_root(&cubic, roots[0]);
    let lo = polish_root(&cubic, roots[2]);
    Ok(hi.sub(lo))
}

/// Newton refinement of one root in double-double arithmetic; exact
/// rational coefficients, so the fixpoint is the true root to ~1e-30.
fn polish_root(cubic: &DepressedCubic, x0: f64) -> Dd {
    let p = dd_from_ratio(cubic.p);
    let q = dd_from_ratio(cubic.q);
    let mut x = Dd::from_f64(x0);
    for _ in 0..3 {
        let fx = x.mul(x).mul(x).add(p.mul(x)).add(q);
        let dfx = 3.0 * x.hi * x.hi + p.hi;
        if dfx == 0.0 {
            break;
        }
        x = x.sub(Dd::from_f64(fx.to_f64() / dfx));
    }
    x
}

fn dd_from_ratio(r: Rational64) -> Dd {
    Dd::from_ratio(*r.numer(), *r.denom())
}

fn ratio_to_f64(r: Rational64) -> f64 {
    r.to_f64().unwrap_or(*r.numer() as f64 / *r.denom() as f64)
}

/// Family parameters plus every derived quantity the scans use.
#[derive(Clone, Copy, Debug)]
pub struct ExtremalParams {
    pub n: u64,
    pub t: u64,
    pub ell: u64,
    /// Integer offset `xi_t`.
    pub xi: i64,
    /// Half offset for even t (`xi = 2 eta`); `None` for odd t.
    pub eta: Option<i64>,
    /// Optimal clique count `floor((2n + xi_t)/(3t))`.
    pub ell0: u64,
    /// Real argmax `2(n-1)/(3t)` of the leading coefficient `c_2(l)`.
    pub ell1: f64,
}

impl ExtremalParams {
    pub fn new(n: u64, t: u64, ell: u64) -> Result<Self> {
        check_family(n, t, ell)?;
        let xi = xi(t)?;
        let eta = if t % 2 == 0 { Some(eta(t)?) } else { None };
        if let Some(e) = eta {
            debug_assert_eq!(xi, 2 * e);
        }
        let ell0 = ell_star(n, t)?;
        Ok(ExtremalParams {
            n,
            t,
            ell,
            xi,
            eta,
            ell0,
            ell1: 2.0 * (n as f64 - 1.0) / (3.0 * t as f64),
        })
    }
}

/// One tie instance: `t = 12k + 4`, `eta_t = 1 + k - 16k^2`,
/// `n = 6(3k+1) l_0 + 16k^2 - k - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TieParams {
    pub t: u64,
    pub eta: i64,
    pub n: u64,
}

/// Exact parameterization of the two-maximizer case. For every k >= 0 and
/// l_0 >= 1 this produces (t, eta_t, n) with `t = 4 (mod 12)`,
/// `ell_star(n, t) = l_0`, and `(2n + xi_t)/(3t)` an integer.
pub fn tie_params(k: u64, ell0: u64) -> TieParams {
    assert!(ell0 >= 1, "tie parameterization needs l_0 >= 1");
    let ki = k as i64;
    let t = 12 * k + 4;
    let eta_val = 1 + ki - 16 * ki * ki;
    let n = (6 * (3 * ki + 1) * ell0 as i64 + 16 * ki * ki - ki - 1) as u64;
    debug_assert_eq!(t % 12, 4);
    debug_assert_eq!(eta(t).unwrap(), eta_val);
    debug_assert_eq!(ell_star(n, t).unwrap(), ell0);
    debug_assert!(is_tie_case(n, t));
    TieParams { t, eta: eta_val, n }
}

/// True iff `t = 4 (mod 12)` and `(2n + xi_t)/(3t)` is an integer — the
/// exact condition under which `G_{l_0}` and `G_{l_0 - 1}` tie.
pub fn is_tie_case(n: u64, t: u64) -> bool {
    if t < 2 || t % 12 != 4 {
        return false;
    }
    let x = xi(t).expect("t >= 2");
    (2 * n as i64 + x).rem_euclid(3 * t as i64) == 0
}

fn check_family(n: u64, t: u64, l: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if t < 2 {
        return Err(Error::InvalidParameter("t must be >= 2".into()));
    }
    if l.saturating_mul(t) > n - 1 {
        return Err(Error::Infeasible(format!(
            "l*t = {} exceeds n-1 = {}",
            l * t,
            n - 1
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Published offsets for t = 2..=20.
    pub const XI_REFERENCE: [i64; 19] = [
        0, 1, 2, 1, 0, 0, -2, -3, -6, -8, -12, -15, -20, -24, -28, -34, -40, -46, -54,
    ];

    #[test]
    fn xi_spot_values() {
        assert_eq!(xi(2).unwrap(), 0);
        assert_eq!(xi(13).unwrap(), -15);
        assert_eq!(xi(20).unwrap(), -54);
        assert!(xi(1).is_err());
        for (i, want) in XI_REFERENCE.iter().enumerate() {
            assert_eq!(xi(i as u64 + 2).unwrap(), *want);
        }
    }

    #[test]
    fn eta_spot_values() {
        assert_eq!(eta(4).unwrap(), 1);
        assert_eq!(eta(16).unwrap(), -14);
        assert_eq!(eta(2).unwrap(), 0);
        assert!(eta(3).is_err());
    }

    #[test]
    fn xi_is_twice_eta_for_even_t() {
        for t in (2..=1000u64).step_by(2) {
            assert_eq!(xi(t).unwrap(), 2 * eta(t).unwrap(), "t={t}");
        }
    }

    #[test]
    fn ell_star_values() {
        assert_eq!(ell_star(100, 2).unwrap(), 33);
        assert_eq!(ell_star(59, 4).unwrap(), 10);
        assert_eq!(ell_star(134, 16).unwrap(), 5);
        // tiny n where l_0 t > n-1
        assert!(ell_star(5, 2).is_err() || ell_star(5, 2).unwrap() * 2 <= 4);
    }

    #[test]
    fn char_cubic_examples() {
        let c = char_cubic(7, 3, 2).unwrap();
        assert_eq!(c, MonicCubic { c2: -2, c1: -6, c0: 0 });
        // roots {0, 1 +- sqrt 7}
        for r in [0.0, 1.0 + 7f64.sqrt(), 1.0 - 7f64.sqrt()] {
            assert!(c.eval(r).abs() < 1e-9);
        }

        let c = char_cubic(7, 2, 3).unwrap();
        assert_eq!(c, MonicCubic { c2: -1, c1: -6, c0: 0 });

        // no isolated vertices: constant term vanishes
        let c = char_cubic(10, 3, 3).unwrap();
        assert_eq!(c.c0, 0);

        assert!(char_cubic(7, 3, 3).is_err());
    }

    #[test]
    fn depressed_cubic_tie_instances() {
        let d = depressed_cubic(59, 4, 10).unwrap();
        assert_eq!(d.p, Rational64::from_integer(-61));
        assert_eq!(d.q, Rational64::from_integer(-6));
        let d9 = depressed_cubic(59, 4, 9).unwrap();
        assert_eq!(d9.p, Rational64::from_integer(-61));
        assert_eq!(d9.q, Rational64::from_integer(6));

        let d = depressed_cubic(7, 3, 2).unwrap();
        assert_eq!(d.p, Rational64::new(-22, 3));
    }

    proptest! {
        /// Substituting x = lambda - c2/3 back must reproduce the integer
        /// cubic exactly: compare both polynomials at several rational
        /// points via exact arithmetic.
        #[test]
        fn depression_is_exact_shift(n in 5u64..300, t in 2u64..9, frac in 0u64..100) {
            let lmax = (n - 1) / t;
            let l = lmax * frac / 100;
            let cubic = char_cubic(n, t, l).unwrap();
            let dep = depressed_cubic(n, t, l).unwrap();
            let shift = Rational64::new(cubic.c2, 3); // x = lambda + c2/3
            for lam in [-3i64, 0, 1, 7, 40] {
                let lam = Rational64::from_integer(lam);
                let x = lam + shift;
                let lhs = x * x * x + dep.p * x + dep.q;
                let rhs = lam * lam * lam
                    + Rational64::from_integer(cubic.c2) * lam * lam
                    + Rational64::from_integer(cubic.c1) * lam
                    + Rational64::from_integer(cubic.c0);
                prop_assert_eq!(lhs, rhs);
            }
        }

        /// Vieta on the family cubic: root sum t-1, pair sum -(n-1),
        /// product -(t-1)(n-1-lt), each to 1e-8 relative.
        #[test]
        fn vieta_identities(n in 5u64..400, t in 2u64..10, frac in 0u64..100) {
            let lmax = (n - 1) / t;
            let l = lmax * frac / 100;
            let cubic = char_cubic(n, t, l).unwrap();
            let dep = depressed_cubic(n, t, l).unwrap();
            let shift = (t as f64 - 1.0) / 3.0;
            let roots = solve_depressed_cubic(&dep).unwrap();
            let lam: Vec<f64> = roots.iter().map(|x| x + shift).collect();
            let scale = (n as f64).max(t as f64 * t as f64);
            let sum: f64 = lam.iter().sum();
            prop_assert!((sum - (t as f64 - 1.0)).abs() <= 1e-8 * scale);
            let pair = lam[0]*lam[1] + lam[0]*lam[2] + lam[1]*lam[2];
            prop_assert!((pair + (n as f64 - 1.0)).abs() <= 1e-8 * scale * scale);
            let prod = lam[0]*lam[1]*lam[2];
            prop_assert!((prod + cubic.c0 as f64).abs() <= 1e-8 * scale * scale * scale);
        }
    }

    #[test]
    fn solve_simple_cubics() {
        let c = DepressedCubic {
            p: Rational64::from_integer(-1),
            q: Rational64::from_integer(0),
        };
        let roots = solve_depressed_cubic(&c).unwrap();
        assert!((roots[0] - 1.0).abs() < 1e-14);
        assert!(roots[1].abs() < 1e-14);
        assert!((roots[2] + 1.0).abs() < 1e-14);

        // Vieta for x^3 - 61x - 6: sum 0, product 6 (= -q)
        let c = DepressedCubic {
            p: Rational64::from_integer(-61),
            q: Rational64::from_integer(-6),
        };
        let r = solve_depressed_cubic(&c).unwrap();
        assert!((r[0] + r[1] + r[2]).abs() < 1e-12);
        assert!((r[0] * r[1] * r[2] - 6.0).abs() < 1e-10);

        // negating q negates the root multiset
        let cneg = DepressedCubic {
            p: Rational64::from_integer(-61),
            q: Rational64::from_integer(6),
        };
        let rneg = solve_depressed_cubic(&cneg).unwrap();
        for (a, b) in r.iter().zip(rneg.iter().rev()) {
            assert!((a + b).abs() < 1e-12);
        }

        // positive p with nonzero q has complex roots: rejected
        let bad = DepressedCubic {
            p: Rational64::from_integer(1),
            q: Rational64::from_integer(1),
        };
        assert!(solve_depressed_cubic(&bad).is_err());
    }

    #[test]
    fn root_residual_postcondition() {
        for (n, t, l) in [(59, 4, 10), (5000, 3, 1111), (100, 2, 33), (12800, 3, 2844)] {
            let c = depressed_cubic(n, t, l).unwrap();
            let p = ratio_to_f64(c.p);
            let bound = 1e-8 * p.abs().powf(1.5).max(1.0);
            for x in solve_depressed_cubic(&c).unwrap() {
                let fx = x * x * x + p * x + ratio_to_f64(c.q);
                assert!(fx.abs() <= bound, "({n},{t},{l}) root {x}: {fx:e} > {bound:e}");
            }
        }
    }

    #[test]
    fn spread_frozen_values() {
        // reference values computed independently at 60-digit precision
        assert!((spread_exact(7, 2, 3).unwrap() - 5.0).abs() < 1e-12);
        assert!((spread_exact(7, 3, 2).unwrap() - 2.0 * 7f64.sqrt()).abs() < 1e-12);
        assert!((spread_exact(10, 3, 0).unwrap() - 6.0).abs() < 1e-12);
        assert!((spread_exact(5, 2, 2).unwrap() - 17f64.sqrt()).abs() < 1e-12);
        assert!(
            (spread_exact(100, 2, 33).unwrap() - 19.933_221_808_455_186_6).abs() < 1e-12
        );
        assert!(
            (spread_exact(5000, 3, 1111).unwrap() - 141.426_070_203_279_956_08).abs() < 1e-11
        );
        assert!(
            (spread_exact(59, 4, 10).unwrap() - 15.619_569_979_110_464_6).abs() < 1e-12
        );
    }

    #[test]
    fn tie_params_examples() {
        assert_eq!(tie_params(0, 10), TieParams { t: 4, eta: 1, n: 59 });
        assert_eq!(tie_params(1, 5), TieParams { t: 16, eta: -14, n: 134 });
        assert_eq!(tie_params(0, 1), TieParams { t: 4, eta: 1, n: 5 });
        assert_eq!(tie_params(2, 3), TieParams { t: 28, eta: -61, n: 187 });
    }

    #[test]
    fn tie_case_predicate() {
        assert!(is_tie_case(59, 4));
        assert!(!is_tie_case(60, 4));
        assert!(!is_tie_case(100, 3));
        assert!(is_tie_case(134, 16));
    }

    #[test]
    fn extremal_params_derivations() {
        let p = ExtremalParams::new(100, 2, 33).unwrap();
        assert_eq!(p.xi, 0);
        assert_eq!(p.eta, Some(0));
        assert_eq!(p.ell0, 33);
        assert!((p.ell1 - 2.0 * 99.0 / 6.0).abs() < 1e-12);
        assert!(ExtremalParams::new(10, 3, 4).is_err());
    }
}
