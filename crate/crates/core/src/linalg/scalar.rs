//! Exact field elements: arbitrary-precision rationals and integers modulo an
//! odd prime.
//!
//! Arithmetic between scalars of different fields is an invariant violation
//! and panics. Every public constructor that assembles scalars into larger
//! objects ([`Matrix`](super::Matrix), [`Subspace`](super::Subspace), algebras)
//! checks field agreement up front and reports [`LinalgError::FieldMismatch`].

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::LinalgError;

/// The field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    /// Integers modulo an odd prime `p`.
    Prime(u64),
}

/// Largest modulus accepted, so that products of residues fit in `u64`.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

impl Field {
    /// The prime field of order `p`. Rejects `p = 2`, composite moduli and
    /// moduli above [`MAX_MODULUS`].
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if p == 2 {
            return Err(LinalgError::Characteristic2);
        }
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(LinalgError::InvalidModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, value: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(value.into())),
            Field::Prime(p) => Scalar::Prime(Fp::new(value.rem_euclid(p as i64) as u64, p)),
        }
    }

    /// `num / den` in this field. Returns `None` when `den` is zero in the field.
    pub fn ratio(self, num: i64, den: i64) -> Option<Scalar> {
        self.from_i64(den).inv().map(|d| self.from_i64(num) * d)
    }

    /// Parses `"a"` or `"a/b"` with arbitrary-precision integers. Over a prime
    /// field the value is reduced modulo `p`.
    pub fn parse(self, text: &str) -> Result<Scalar, LinalgError> {
        let bad = || LinalgError::Parse(text.to_string());
        let value = BigRational::from_str(text.trim()).map_err(|_| bad())?;
        match self {
            Field::Rational => Ok(Scalar::Rational(value)),
            Field::Prime(p) => {
                let modulus = BigInt::from(p);
                let reduce = |x: &BigInt| x.mod_floor(&modulus).to_u64().expect("residue fits");
                let num = Fp::new(reduce(value.numer()), p);
                let den = Fp::new(reduce(value.denom()), p);
                let den = den.inv().ok_or_else(bad)?;
                Ok(Scalar::Prime(num * den))
            }
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue modulo an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    fn new(value: u64, modulus: u64) -> Fp {
        debug_assert!(value < modulus);
        Fp { value, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn check(self, other: Fp) {
        assert_eq!(self.modulus, other.modulus, "field mismatch in scalar arithmetic");
    }

    fn inv(self) -> Option<Fp> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut base = self.value;
        let mut exp = self.modulus - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.modulus;
            }
            base = base * base % self.modulus;
            exp >>= 1;
        }
        Some(Fp::new(acc, self.modulus))
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(rhs);
        Fp::new((self.value + rhs.value) % self.modulus, self.modulus)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(rhs);
        Fp::new((self.value + self.modulus - rhs.value) % self.modulus, self.modulus)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(rhs);
        Fp::new(self.value * rhs.value % self.modulus, self.modulus)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::new((self.modulus - self.value) % self.modulus, self.modulus)
    }
}

/// An exact element of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime(Fp),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime(x) => Field::Prime(x.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Prime(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_one(),
            Scalar::Prime(x) => x.value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(x) if x.is_zero() => None,
            Scalar::Rational(x) => Some(Scalar::Rational(x.recip())),
            Scalar::Prime(x) => x.inv().map(Scalar::Prime),
        }
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(x) => Some(x),
            Scalar::Prime(_) => None,
        }
    }

    fn zip(
        &self,
        rhs: &Scalar,
        rat: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        fp: impl FnOnce(Fp, Fp) -> Fp,
    ) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(rat(a, b)),
            (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(fp(*a, *b)),
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }
}

impl fmt::Display for Scalar {
    /// Rationals print as `a` or `a/b`; residues print as their
    /// representative in `[0, p)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => write!(f, "{x}"),
            Scalar::Prime(x) => write!(f, "{}", x.value),
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.zip(rhs, |a, b| a + b, |a, b| a + b)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.zip(rhs, |a, b| a - b, |a, b| a - b)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.zip(rhs, |a, b| a * b, |a, b| a * b)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    // a / b = a · b⁻¹
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Prime(x) => Scalar::Prime(-*x),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Prime(a), Scalar::Prime(b)) => *a = *a + *b,
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            (Scalar::Prime(a), Scalar::Prime(b)) => *a = *a - *b,
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }
}
