//! Double-double arithmetic (unevaluated sum of two `f64`s, ~106-bit mantissa).
//!
//! The series kernels in `specfun` suffer heavy cancellation: the Maclaurin
//! series for Ai(t) near |t| = 5 sums terms of magnitude ~150 down to a value
//! of order 0.3, and the complex-order Bessel series at x = 20 loses ~9
//! digits. Accumulating in double-double keeps the final result within half
//! an ulp of the correctly rounded `f64`, which the tight finite-difference
//! residual tests require.

/// Error-free sum: returns (hi, lo) with hi + lo == a + b exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Error-free sum assuming |a| >= |b|.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// Error-free product via fused multiply-add.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

/// A double-double value `hi + lo` with |lo| <= ulp(hi)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub(crate) const DD_ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
pub(crate) const DD_ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

impl Dd {
    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2b) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2b + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, rhs: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs);
        let p2 = p2 + self.lo * rhs;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul_f64(q1));
        let q2 = r.hi / rhs.hi;
        let r2 = r.sub(rhs.mul_f64(q2));
        let q3 = r2.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd::new(hi, lo + q3)
    }

    #[inline]
    pub fn div_f64(self, rhs: f64) -> Dd {
        self.div(Dd::from_f64(rhs))
    }

    /// Parse a decimal literal (possibly more digits than an f64 can hold).
    /// Digits beyond the ~32 significant ones of double-double are ignored.
    pub fn from_decimal(s: &str) -> Dd {
        let (neg, s) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        let mut acc = DD_ZERO;
        for c in int_part.chars().chain(frac_part.chars()) {
            let d = c.to_digit(10).expect("decimal digit") as f64;
            acc = acc.mul_f64(10.0).add(Dd::from_f64(d));
        }
        let mut scale = DD_ONE;
        for _ in 0..frac_part.len() {
            scale = scale.mul_f64(10.0);
        }
        let v = acc.div(scale);
        if neg {
            v.neg()
        } else {
            v
        }
    }
}

/// Complex double-double, for the cancellation-prone Bessel series of
/// complex order.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    #[inline]
    pub fn from_f64(re: f64, im: f64) -> Self {
        CDd {
            re: Dd::from_f64(re),
            im: Dd::from_f64(im),
        }
    }

    #[inline]
    pub fn add(self, rhs: CDd) -> CDd {
        CDd {
            re: self.re.add(rhs.re),
            im: self.im.add(rhs.im),
        }
    }

    #[inline]
    pub fn mul(self, rhs: CDd) -> CDd {
        CDd {
            re: self.re.mul(rhs.re).sub(self.im.mul(rhs.im)),
            im: self.re.mul(rhs.im).add(self.im.mul(rhs.re)),
        }
    }

    #[inline]
    pub fn mul_dd(self, rhs: Dd) -> CDd {
        CDd {
            re: self.re.mul(rhs),
            im: self.im.mul(rhs),
        }
    }

    #[inline]
    pub fn div(self, rhs: CDd) -> CDd {
        let denom = rhs.re.mul(rhs.re).add(rhs.im.mul(rhs.im));
        let num = self.mul(CDd {
            re: rhs.re,
            im: rhs.im.neg(),
        });
        CDd {
            re: num.re.div(denom),
            im: num.im.div(denom),
        }
    }

    /// Squared magnitude, rounded to f64.
    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.re.mul(self.re).add(self.im.mul(self.im)).to_f64()
    }
}
