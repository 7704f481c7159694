//! Double-double arithmetic (~31 significant digits).
//!
//! The asymptotic-order checks compare spreads of magnitude ~2*sqrt(n)
//! against a four-term series whose true residual at the largest n is a
//! few 1e-15 — below what plain f64 can resolve on values that size. The
//! classic error-free transformations (Dekker/Knuth) give enough headroom
//! without pulling in a bignum float.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// Dekker split-based product; avoids relying on hardware FMA so results
/// are identical on any IEEE-754 target.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    const SPLIT: f64 = 134217729.0; // 2^27 + 1
    let p = a * b;
    let (ah, al) = {
        let t = SPLIT * a;
        let h = t - (t - a);
        (h, a - h)
    };
    let (bh, bl) = {
        let t = SPLIT * b;
        let h = t - (t - b);
        (h, b - h)
    };
    let err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact whenever the integer is representable in f64 (always true
    /// below 2^53, and for e.g. powers of two above it).
    #[inline]
    pub fn from_i64(x: i64) -> Dd {
        debug_assert_eq!(x as f64 as i64, x, "integer not representable exactly");
        Dd { hi: x as f64, lo: 0.0 }
    }

    /// Exact rational value `num/den`.
    pub fn from_ratio(num: i64, den: i64) -> Dd {
        Dd::from_i64(num).div(Dd::from_i64(den))
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    pub fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul(Dd::from_f64(q1)));
        let q2 = r.hi / rhs.hi;
        let r = r.sub(rhs.mul(Dd::from_f64(q2)));
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from_f64(q3))
    }

    /// One Newton step on top of the f64 square root is enough for full
    /// double-double accuracy.
    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        debug_assert!(self.hi > 0.0);
        let x = self.hi.sqrt();
        let x_dd = Dd::from_f64(x);
        let err = self.sub(x_dd.mul(x_dd));
        x_dd.add(Dd::from_f64(err.to_f64() / (2.0 * x)))
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    pub fn lt(self, rhs: Dd) -> bool {
        self.hi < rhs.hi || (self.hi == rhs.hi && self.lo < rhs.lo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_small_arithmetic() {
        let a = Dd::from_i64(3).div(Dd::from_i64(7));
        let b = a.mul(Dd::from_i64(7));
        assert!((b.to_f64() - 3.0).abs() < 1e-30);
        assert!(b.sub(Dd::from_i64(3)).abs().to_f64() < 1e-30);
    }

    #[test]
    fn resolves_below_f64() {
        // (1 + 2^-60) - 1 is invisible to f64 but exact in Dd
        let tiny = Dd::from_ratio(1, 1 << 60);
        let x = Dd::from_i64(1).add(tiny);
        let back = x.sub(Dd::from_i64(1));
        assert_eq!(back.to_f64(), (1.0f64 / (1u64 << 60) as f64));
    }

    #[test]
    fn sqrt_squares_back() {
        for v in [2i64, 3, 4999, 12799] {
            let s = Dd::from_i64(v).sqrt();
            let err = s.mul(s).sub(Dd::from_i64(v)).abs().to_f64();
            assert!(err < 1e-27, "sqrt({v}) err {err}");
        }
    }
}
