//! Scalar types.
//!
//! Every algebraic container in the crate is generic over [`Scalar`]. The
//! symbolic modules work over exact rationals ([`Rat`]); the numeric KZ
//! module works over complex fixed-point numbers ([`Fixed`] inside
//! [`num_complex::Complex`]); `f64` and `Complex<f64>` are provided for quick
//! experiments.

use num_bigint::{BigInt, Sign};
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

/// Exact arbitrary-precision rational numbers.
pub type Rat = BigRational;

/// Build a rational from a numerator and a denominator.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Build an integral rational.
pub fn rint(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Render a rational as `p/q` (the denominator is always printed).
pub fn render_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Coefficient field used by Lie polynomials, series and the equation checkers.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Embed an exact rational.
    fn from_rat(r: &Rat) -> Self;

    /// Embed an integer.
    fn from_int(k: i64) -> Self {
        Self::from_rat(&rint(k))
    }

    /// Multiply by an exact rational.
    fn mul_rat(&self, r: &Rat) -> Self {
        self.clone() * Self::from_rat(r)
    }

    /// Multiplicative inverse, if it exists.
    fn try_inv(&self) -> Option<Self>;

    /// Absolute value (modulus for complex types) as an `f64`.
    fn magnitude(&self) -> f64;

    /// True when the value vanishes up to the working precision of the type.
    fn is_negligible(&self) -> bool;

    /// Text form used in reports.
    fn render(&self) -> String;

    /// The exact rational value, when the type is exact.
    fn as_rat(&self) -> Option<Rat> {
        None
    }
}

impl Scalar for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn mul_rat(&self, r: &Rat) -> Self {
        self * r
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
    fn render(&self) -> String {
        render_rat(self)
    }
    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
}

impl Scalar for f64 {
    fn from_rat(r: &Rat) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }
    fn try_inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-12
    }
    fn render(&self) -> String {
        format!("{:.17e}", self)
    }
}

impl Scalar for Complex<f64> {
    fn from_rat(r: &Rat) -> Self {
        Complex::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.inv())
        }
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn is_negligible(&self) -> bool {
        self.norm() < 1e-12
    }
    fn render(&self) -> String {
        format!("{:.17e} {:.17e}", self.re, self.im)
    }
}

/// Binary fixed-point number `m / 2^P` with an arbitrary-precision mantissa.
///
/// Addition and subtraction are exact; multiplication and division round to
/// the nearest representable value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fixed<const P: u32> {
    mantissa: BigInt,
}

impl<const P: u32> Fixed<P> {
    /// Number of fractional bits.
    pub const BITS: u32 = P;

    /// Wrap a raw mantissa.
    pub fn from_mantissa(mantissa: BigInt) -> Self {
        Fixed { mantissa }
    }

    /// The raw mantissa.
    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    fn shift_round(x: BigInt, bits: u32) -> BigInt {
        if bits == 0 {
            return x;
        }
        let half = BigInt::one() << (bits - 1);
        (x + half) >> bits
    }

    /// Absolute value.
    pub fn abs(&self) -> Self {
        Fixed { mantissa: self.mantissa.abs() }
    }

    /// Nearest `f64`.
    pub fn to_f64(&self) -> f64 {
        if self.mantissa.is_zero() {
            return 0.0;
        }
        let bits = self.mantissa.bits() as i64;
        let drop = (bits - 60).max(0);
        let top = (&self.mantissa >> drop as usize).to_f64().unwrap_or(0.0);
        top * 2f64.powi((drop - P as i64) as i32)
    }

    /// Decimal rendering with `digits` digits after the point.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10).pow(digits as u32);
        let scaled = Self::shift_round(&self.mantissa * scale.clone(), P);
        let neg = scaled.sign() == Sign::Minus;
        let (int, frac) = scaled.abs().div_rem(&scale);
        let frac = frac.to_string();
        let pad = "0".repeat(digits.saturating_sub(frac.len()));
        format!("{}{}.{}{}", if neg { "-" } else { "" }, int, pad, frac)
    }

    /// Number of decimal digits justified by the precision.
    pub fn decimal_digits() -> usize {
        ((P as f64) * std::f64::consts::LOG10_2).floor() as usize
    }

    /// Multiply by 2^k (k may be negative).
    pub fn scale_pow2(&self, k: i32) -> Self {
        if k >= 0 {
            Fixed { mantissa: &self.mantissa << k as usize }
        } else {
            Fixed { mantissa: Self::shift_round(self.mantissa.clone(), (-k) as u32) }
        }
    }

    /// The constant log 2, from the series sum_k 1/(k 2^k).
    pub fn ln2() -> Self {
        // Work with guard bits and round at the end.
        let guard = 32u32;
        let prec = P + guard;
        let one = BigInt::one() << prec as usize;
        let mut sum = BigInt::zero();
        let mut k = 1u64;
        loop {
            let term = (&one >> k as usize) / BigInt::from(k);
            if term.is_zero() {
                break;
            }
            sum += term;
            k += 1;
        }
        Fixed { mantissa: Self::shift_round(sum, guard) }
    }

    /// The constant pi, from Machin's formula 16 atan(1/5) - 4 atan(1/239).
    pub fn pi() -> Self {
        let guard = 32u32;
        let prec = P + guard;
        let atan_inv = |q: i64| -> BigInt {
            let one = BigInt::one() << prec as usize;
            let q2 = BigInt::from(q * q);
            let mut power = one / BigInt::from(q);
            let mut sum = BigInt::zero();
            let mut k = 0i64;
            while !power.is_zero() {
                let term = &power / BigInt::from(2 * k + 1);
                if k % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
                power /= &q2;
                k += 1;
            }
            sum
        };
        let value = atan_inv(5) * 16 - atan_inv(239) * 4;
        Fixed { mantissa: Self::shift_round(value, guard) }
    }
}

impl<const P: u32> fmt::Debug for Fixed<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(Self::decimal_digits().min(40)))
    }
}

impl<const P: u32> fmt::Display for Fixed<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(Self::decimal_digits()))
    }
}

impl<const P: u32> Add for Fixed<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fixed { mantissa: self.mantissa + rhs.mantissa }
    }
}

impl<const P: u32> Sub for Fixed<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fixed { mantissa: self.mantissa - rhs.mantissa }
    }
}

impl<const P: u32> Mul for Fixed<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fixed { mantissa: Self::shift_round(self.mantissa * rhs.mantissa, P) }
    }
}

impl<const P: u32> Div for Fixed<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let num = self.mantissa << (P as usize + 1);
        let q = num / rhs.mantissa;
        Fixed { mantissa: Self::shift_round(q, 1) }
    }
}

impl<const P: u32> Rem for Fixed<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        Fixed { mantissa: self.mantissa % rhs.mantissa }
    }
}

impl<const P: u32> Neg for Fixed<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fixed { mantissa: -self.mantissa }
    }
}

impl<const P: u32> Zero for Fixed<P> {
    fn zero() -> Self {
        Fixed { mantissa: BigInt::zero() }
    }
    fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }
}

impl<const P: u32> One for Fixed<P> {
    fn one() -> Self {
        Fixed { mantissa: BigInt::one() << P as usize }
    }
}

impl<const P: u32> Num for Fixed<P> {
    type FromStrRadixErr = String;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, String> {
        let value = BigInt::from_str_radix(s, radix).map_err(|e| e.to_string())?;
        Ok(Fixed { mantissa: value << P as usize })
    }
}

impl<const P: u32> Fixed<P> {
    fn from_rat_value(r: &Rat) -> Self {
        let num = r.numer() << (P as usize + 1);
        let q = num.div_floor(r.denom());
        Fixed { mantissa: Self::shift_round(q, 1) }
    }

    fn negligible_threshold() -> BigInt {
        // Values below 2^(-P/2) count as zero.
        BigInt::one() << (P / 2) as usize
    }
}

impl<const P: u32> Scalar for Complex<Fixed<P>> {
    fn from_rat(r: &Rat) -> Self {
        Complex::new(Fixed::from_rat_value(r), Fixed::zero())
    }
    fn mul_rat(&self, r: &Rat) -> Self {
        let scale = |x: &Fixed<P>| -> Fixed<P> {
            let num = (&x.mantissa * r.numer()) << 1usize;
            let q = num.div_floor(r.denom());
            Fixed { mantissa: Fixed::<P>::shift_round(q, 1) }
        };
        Complex::new(scale(&self.re), scale(&self.im))
    }
    fn try_inv(&self) -> Option<Self> {
        let n = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        if n.is_zero() {
            None
        } else {
            Some(Complex::new(self.re.clone() / n.clone(), -(self.im.clone() / n)))
        }
    }
    fn magnitude(&self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }
    fn is_negligible(&self) -> bool {
        let t = Fixed::<P>::negligible_threshold();
        self.re.mantissa.abs() < t && self.im.mantissa.abs() < t
    }
    fn render(&self) -> String {
        let d = Fixed::<P>::decimal_digits();
        format!("{} {}", self.re.to_decimal(d), self.im.to_decimal(d))
    }
}

/// Complex fixed-point scalar with `P` fractional bits.
pub type CFixed<const P: u32> = Complex<Fixed<P>>;
