//! Integer polynomials, dyadic rationals and Sturm chains.
//!
//! Only what the exact spectral comparison needs: sign evaluation at dyadic
//! points, pseudo-remainders, gcd, and root counting on half-open intervals.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense polynomial with integer coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.0.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Sign of `p(num / 2^exp)`.
    pub fn sign_at(&self, x: &Dyadic) -> Sign {
        let Some(d) = self.degree() else {
            return Sign::NoSign;
        };
        // 2^(exp*d) * p(x) = sum c_k num^k 2^(exp (d-k)), by Horner in num.
        let mut acc = self.0[d].clone();
        for k in (0..d).rev() {
            acc = acc * &x.num + (&self.0[k] << (x.exp as usize * (d - k)));
        }
        acc.sign()
    }

    /// Divides out the positive content.
    pub fn primitive(&self) -> Self {
        let content = self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if content.is_zero() || content.is_one() {
            return self.clone();
        }
        Self(self.0.iter().map(|c| c / &content).collect())
    }

    /// Remainder of `c * self` by `divisor` for some positive integer `c`.
    pub fn positive_pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap();
        let scale = lc.abs();
        let lc_sign = BigInt::from(if lc.is_negative() { -1 } else { 1 });
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let lead = r.last().unwrap().clone() * &lc_sign;
            for c in r.iter_mut() {
                *c *= &scale;
            }
            for (k, dc) in divisor.0.iter().enumerate() {
                r[k + shift] -= &lead * dc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            // keep coefficient growth in check; content is positive so the sign is kept
            let content = r.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
            if !content.is_zero() && !content.is_one() {
                for c in r.iter_mut() {
                    *c /= &content;
                }
            }
        }
        IntPoly(r)
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let r = a.positive_pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        if a.leading().is_some_and(Signed::is_negative) {
            a = a.neg();
        }
        a
    }

    /// Quotient and remainder by a monic divisor, exact over the integers.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        assert!(divisor.leading().unwrap().is_one(), "divisor must be monic");
        let mut r = self.0.clone();
        let mut q = vec![BigInt::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let shift = r.len() - 1 - dd;
            let lead = r.last().unwrap().clone();
            for (k, dc) in divisor.0.iter().enumerate() {
                r[k + shift] -= &lead * dc;
            }
            q[shift] = lead;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (IntPoly::new(q), IntPoly::new(r))
    }

    /// Integer strictly above the absolute value of every root.
    pub fn root_bound(&self) -> BigInt {
        let lc = self.leading().expect("nonzero polynomial").abs();
        let m = self.0.iter().map(|c| c.abs()).max().unwrap();
        // Cauchy: |r| < 1 + max|c_k| / |lc|
        m / lc + 2
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Exact dyadic rational `num / 2^exp`.
#[derive(Clone, Debug)]
pub struct Dyadic {
    pub num: BigInt,
    pub exp: u32,
}

impl Dyadic {
    pub fn integer(v: BigInt) -> Self {
        Self { num: v, exp: 0 }
    }

    /// Exact value of a finite double.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite value {x}");
        if x == 0.0 {
            return Self::integer(BigInt::zero());
        }
        let bits = x.to_bits();
        let negative = bits >> 63 == 1;
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mantissa, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        let mut num = BigInt::from(mantissa);
        if negative {
            num = -num;
        }
        let d = if e >= 0 {
            Self {
                num: num << e as usize,
                exp: 0,
            }
        } else {
            Self { num, exp: (-e) as u32 }
        };
        d.reduced()
    }

    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.exp = 0;
            return self;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0).min(self.exp as u64) as u32;
        self.num >>= tz as usize;
        self.exp -= tz;
        self
    }

    fn at_exp(&self, exp: u32) -> BigInt {
        &self.num << (exp - self.exp) as usize
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        let e = self.exp.max(other.exp);
        Dyadic {
            num: self.at_exp(e) - other.at_exp(e),
            exp: e,
        }
        .reduced()
    }

    pub fn midpoint(&self, other: &Dyadic) -> Dyadic {
        let e = self.exp.max(other.exp);
        Dyadic {
            num: self.at_exp(e) + other.at_exp(e),
            exp: e + 1,
        }
        .reduced()
    }

    /// Nearest double (up to one extra rounding for subnormal results).
    pub fn to_f64(&self) -> f64 {
        let mut x = self.num.to_f64().unwrap_or(f64::NAN);
        let mut e = self.exp as i32;
        while e > 0 {
            let step = e.min(1000);
            x /= 2f64.powi(step);
            e -= step;
        }
        x
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        self.at_exp(e).cmp(&other.at_exp(e))
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...` with positively scaled remainders.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut polys = vec![p.clone()];
        if p.degree().unwrap_or(0) == 0 {
            return Self { polys };
        }
        polys.push(p.derivative());
        loop {
            let k = polys.len();
            let r = polys[k - 2].positive_pseudo_rem(&polys[k - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(r.primitive().neg());
        }
        Self { polys }
    }

    pub fn base(&self) -> &IntPoly {
        &self.polys[0]
    }

    fn variations<I: Iterator<Item = Sign>>(signs: I) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for s in signs.filter(|&s| s != Sign::NoSign) {
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Dyadic) -> usize {
        Self::variations(self.polys.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::variations(
            self.polys
                .iter()
                .map(|p| p.leading().map_or(Sign::NoSign, BigInt::sign)),
        )
    }

    /// Distinct real roots in `(a, b]`; `a` must not be a root.
    pub fn count_between(&self, a: &Dyadic, b: &Dyadic) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Distinct real roots greater than `a`; `a` must not be a root.
    pub fn count_above(&self, a: &Dyadic) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at_pos_infinity())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(x: f64) -> Dyadic {
        Dyadic::from_f64(x)
    }

    #[test]
    fn dyadic_exactness() {
        for x in [0.0, 1.0, -2.5, 0.1, 1e-300, 1.0 + 5f64.sqrt(), -7e200] {
            assert_eq!(d(x).to_f64(), x);
        }
        assert!(d(0.1) < d(0.10000000000000002));
        assert_eq!(d(1.0).midpoint(&d(2.0)), d(1.5));
        assert_eq!(d(-1.0).midpoint(&d(1.0)), d(0.0));
    }

    #[test]
    fn sign_evaluation() {
        // x^2 - 2
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(p.sign_at(&d(std::f64::consts::SQRT_2 - 1e-9)), Sign::Minus);
        assert_eq!(p.sign_at(&d(std::f64::consts::SQRT_2 + 1e-9)), Sign::Plus);
        // (x - 1/2)(x + 3) = x^2 + 5/2 x - 3/2, scaled by 2
        let q = IntPoly::from_i64(&[-3, 5, 2]);
        assert_eq!(q.sign_at(&d(0.5)), Sign::NoSign);
        assert_eq!(q.sign_at(&d(-3.0)), Sign::NoSign);
    }

    #[test]
    fn gcd_and_division() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = IntPoly::from_i64(&[-2, 1, 1]);
        let b = IntPoly::from_i64(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(a.gcd(&a), a);
        let (q, r) = a.div_rem_monic(&IntPoly::from_i64(&[-1, 1]));
        assert_eq!(q, IntPoly::from_i64(&[2, 1]));
        assert!(r.is_zero());
        let coprime = IntPoly::from_i64(&[1, 0, 1]).gcd(&IntPoly::from_i64(&[-1, 1]));
        assert_eq!(coprime.degree(), Some(0));
    }

    #[test]
    fn sturm_counts() {
        // (x-1)^2 (x-2)(x+1) = x^4 - 3x^3 + x^2 + 3x - 2
        let p = IntPoly::from_i64(&[-2, 3, 1, -3, 1]);
        let s = SturmChain::new(&p);
        assert_eq!(s.count_between(&d(-10.0), &d(10.0)), 3);
        assert_eq!(s.count_between(&d(0.5), &d(1.5)), 1);
        assert_eq!(s.count_above(&d(1.5)), 1);
        assert_eq!(s.count_above(&d(2.5)), 0);
        assert_eq!(s.count_between(&d(-0.5), &d(2.0)), 2);
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64(&[-2, -3, 0, 1]).to_string(), "x^3 - 3x - 2");
        assert_eq!(IntPoly::from_i64(&[]).to_string(), "0");
    }
}
