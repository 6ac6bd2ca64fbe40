//! Exact field arithmetic over the rationals and over prime fields `GF(p)`.
//!
//! Every value is a [`Scalar`]: a fully reduced arbitrary-precision fraction
//! or a canonical residue in `[0, p)`. Operations never round, and mixing
//! scalars from different fields is an error, not a coercion.

use core::fmt;

use alloc::string::String;
use alloc::string::ToString;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The field a [`Scalar`] lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    /// The rational numbers.
    Rationals,
    /// The prime field `GF(p)`; the modulus is guaranteed prime when the
    /// value was built through [`FieldDescriptor::prime_field`].
    PrimeField(u64),
}

impl FieldDescriptor {
    /// Builds a prime-field descriptor, rejecting composite or trivial moduli.
    pub fn prime_field(modulus: u64) -> Result<Self, ArithError> {
        if is_prime(modulus) {
            Ok(FieldDescriptor::PrimeField(modulus))
        } else {
            Err(ArithError::NotPrime(modulus))
        }
    }

    /// 0 for the rationals, `p` for `GF(p)`.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "rational"),
            FieldDescriptor::PrimeField(p) => write!(f, "gf {p}"),
        }
    }
}

/// Errors from exact scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// Two operands belong to different fields.
    FieldMismatch {
        left: FieldDescriptor,
        right: FieldDescriptor,
    },
    /// Inversion or division by zero.
    DivisionByZero,
    /// A modulus that is not a prime number.
    NotPrime(u64),
    /// A rational with a nontrivial denominator cannot be reduced modulo `p`.
    NotAnInteger(String),
    /// A rational literal with denominator zero.
    ZeroDenominator,
    /// Text that is not a valid scalar literal.
    MalformedScalar(String),
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::FieldMismatch { left, right } => {
                write!(f, "field mismatch: {left} vs {right}")
            }
            ArithError::DivisionByZero => write!(f, "division by zero"),
            ArithError::NotPrime(n) => write!(f, "modulus {n} is not prime"),
            ArithError::NotAnInteger(s) => {
                write!(f, "{s} is not an integer and has no prime-field image")
            }
            ArithError::ZeroDenominator => write!(f, "zero denominator"),
            ArithError::MalformedScalar(s) => write!(f, "malformed scalar literal '{s}'"),
        }
    }
}

impl core::error::Error for ArithError {}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Res { value: u64, modulus: u64 },
}

/// An exact field element: a reduced rational or a canonical residue mod `p`.
///
/// Scalars are canonical by construction — equal field elements compare equal
/// with `==`, and rendering a scalar always yields the same text.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    /// The additive identity of `field`.
    pub fn zero(field: FieldDescriptor) -> Scalar {
        match field {
            FieldDescriptor::Rationals => Scalar(Repr::Rat(BigRational::zero())),
            FieldDescriptor::PrimeField(p) => Scalar(Repr::Res {
                value: 0,
                modulus: p,
            }),
        }
    }

    /// The multiplicative identity of `field`.
    pub fn one(field: FieldDescriptor) -> Scalar {
        match field {
            FieldDescriptor::Rationals => Scalar(Repr::Rat(BigRational::one())),
            FieldDescriptor::PrimeField(p) => Scalar(Repr::Res {
                value: 1 % p,
                modulus: p,
            }),
        }
    }

    /// Embeds a machine integer into `field` (reduced mod `p` for `GF(p)`).
    pub fn from_integer(value: i64, field: FieldDescriptor) -> Scalar {
        match field {
            FieldDescriptor::Rationals => {
                Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(value))))
            }
            FieldDescriptor::PrimeField(p) => {
                let v = if value >= 0 {
                    value as u64 % p
                } else {
                    (p - (value.unsigned_abs() % p)) % p
                };
                Scalar(Repr::Res {
                    value: v,
                    modulus: p,
                })
            }
        }
    }

    /// Builds the reduced rational `numer/denom`.
    pub fn rational(numer: i64, denom: i64) -> Result<Scalar, ArithError> {
        if denom == 0 {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Scalar(Repr::Rat(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        ))))
    }

    /// Wraps an arbitrary-precision rational (already reduced by its type).
    pub fn from_big_rational(value: BigRational) -> Scalar {
        Scalar(Repr::Rat(value))
    }

    /// Builds the canonical residue `value mod modulus` in `GF(modulus)`.
    ///
    /// The modulus is taken on trust here; validate it once through
    /// [`FieldDescriptor::prime_field`] before constructing residues.
    pub fn residue(value: u64, modulus: u64) -> Scalar {
        Scalar(Repr::Res {
            value: value % modulus,
            modulus,
        })
    }

    /// The field this scalar belongs to.
    pub fn field(&self) -> FieldDescriptor {
        match &self.0 {
            Repr::Rat(_) => FieldDescriptor::Rationals,
            Repr::Res { modulus, .. } => FieldDescriptor::PrimeField(*modulus),
        }
    }

    /// The underlying rational, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(q) => Some(q),
            Repr::Res { .. } => None,
        }
    }

    /// The canonical residue value, if this is a prime-field scalar.
    pub fn residue_value(&self) -> Option<u64> {
        match &self.0 {
            Repr::Rat(_) => None,
            Repr::Res { value, .. } => Some(*value),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rat(q) => q.is_zero(),
            Repr::Res { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rat(q) => q.is_one(),
            Repr::Res { value, .. } => *value == 1,
        }
    }

    /// True for negative rationals; residues carry no sign.
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Rat(q) => q.is_negative(),
            Repr::Res { .. } => false,
        }
    }

    fn check_same_field(&self, other: &Scalar) -> Result<(), ArithError> {
        let (lf, rf) = (self.field(), other.field());
        if lf == rf {
            Ok(())
        } else {
            Err(ArithError::FieldMismatch {
                left: lf,
                right: rf,
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.check_same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            (
                Repr::Res {
                    value: a,
                    modulus: p,
                },
                Repr::Res { value: b, .. },
            ) => Scalar(Repr::Res {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            _ => unreachable!("fields already matched"),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.check_same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a - b)),
            (
                Repr::Res {
                    value: a,
                    modulus: p,
                },
                Repr::Res { value: b, .. },
            ) => Scalar(Repr::Res {
                value: ((*a as u128 + (*p - *b) as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            _ => unreachable!("fields already matched"),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.check_same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            (
                Repr::Res {
                    value: a,
                    modulus: p,
                },
                Repr::Res { value: b, .. },
            ) => Scalar(Repr::Res {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            _ => unreachable!("fields already matched"),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.checked_mul(&other.inv()?)
    }

    /// The multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<Scalar, ArithError> {
        match &self.0 {
            Repr::Rat(q) => {
                if q.is_zero() {
                    Err(ArithError::DivisionByZero)
                } else {
                    Ok(Scalar(Repr::Rat(q.recip())))
                }
            }
            Repr::Res { value, modulus } => match mod_inverse(*value, *modulus) {
                Some(v) => Ok(Scalar(Repr::Res {
                    value: v,
                    modulus: *modulus,
                })),
                None => Err(ArithError::DivisionByZero),
            },
        }
    }

    /// The additive inverse.
    pub fn negated(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(q) => Scalar(Repr::Rat(-q.clone())),
            Repr::Res { value, modulus } => Scalar(Repr::Res {
                value: if *value == 0 { 0 } else { *modulus - *value },
                modulus: *modulus,
            }),
        }
    }

    /// Parses the canonical text form: an optionally signed integer, or
    /// `p/q` over the rationals. Prime fields accept integer literals only
    /// (reduced into canonical residues); fractions are rejected.
    pub fn parse(text: &str, field: FieldDescriptor) -> Result<Scalar, ArithError> {
        let malformed = || ArithError::MalformedScalar(String::from(text));
        let (numer_text, denom_text) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let numer: BigInt = numer_text.parse().map_err(|_| malformed())?;
        if let FieldDescriptor::PrimeField(p) = field {
            if denom_text.is_some() {
                return Err(ArithError::NotAnInteger(String::from(text)));
            }
            return Scalar::from_big_rational(BigRational::from_integer(numer)).to_prime_field(p);
        }
        let denom: BigInt = match denom_text {
            Some(d) => d.parse().map_err(|_| malformed())?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Scalar::from_big_rational(BigRational::new(numer, denom)))
    }

    /// Re-interprets an integer rational as a canonical residue mod `p`.
    ///
    /// Residues already in `GF(p)` pass through; rationals with a nontrivial
    /// denominator and residues from other moduli are rejected.
    pub fn to_prime_field(&self, modulus: u64) -> Result<Scalar, ArithError> {
        match &self.0 {
            Repr::Rat(q) => {
                if !q.denom().is_one() {
                    return Err(ArithError::NotAnInteger(self.to_string()));
                }
                let p = BigInt::from(modulus);
                let mut r = q.numer() % &p;
                if r.is_negative() {
                    r += &p;
                }
                let (_, digits) = r.to_u64_digits();
                let value = digits.first().copied().unwrap_or(0);
                Ok(Scalar(Repr::Res { value, modulus }))
            }
            Repr::Res { modulus: m, .. } if *m == modulus => Ok(self.clone()),
            Repr::Res { modulus: m, .. } => Err(ArithError::FieldMismatch {
                left: FieldDescriptor::PrimeField(*m),
                right: FieldDescriptor::PrimeField(modulus),
            }),
        }
    }
}

impl fmt::Display for Scalar {
    /// Canonical text: `p/q` for rationals (`/q` omitted when `q = 1`),
    /// the residue value for prime fields.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Res { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl core::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            /// Panics on a field mismatch; use the `checked_*` form at
            /// validation boundaries.
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .expect("scalar operands from the same field")
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);

impl core::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.negated()
    }
}

/// Extended-Euclid inverse of `a` mod `m`; `None` when `gcd(a, m) != 1`.
fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    let mut x = old_s % m as i128;
    if x < 0 {
        x += m as i128;
    }
    Some(x as u64)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin primality test, exact for all `u64`.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} decides
/// primality for every integer below 3.3 * 10^24, which covers `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    const Q: FieldDescriptor = FieldDescriptor::Rationals;

    #[test]
    fn rational_addition_reduces() {
        let half = Scalar::rational(1, 2).unwrap();
        let third = Scalar::rational(1, 3).unwrap();
        let sum = half.checked_add(&third).unwrap();
        assert_eq!(sum, Scalar::rational(5, 6).unwrap());
        assert_eq!(format!("{sum}"), "5/6");
    }

    #[test]
    fn rational_constructor_normalizes() {
        assert_eq!(
            Scalar::rational(2, 4).unwrap(),
            Scalar::rational(1, 2).unwrap()
        );
        assert_eq!(format!("{}", Scalar::rational(1, -2).unwrap()), "-1/2");
        assert_eq!(format!("{}", Scalar::rational(-6, -3).unwrap()), "2");
        assert_eq!(Scalar::rational(1, 0), Err(ArithError::ZeroDenominator));
    }

    #[test]
    fn integer_rationals_render_without_denominator() {
        assert_eq!(format!("{}", Scalar::from_integer(3, Q)), "3");
        assert_eq!(format!("{}", Scalar::from_integer(-7, Q)), "-7");
        assert_eq!(format!("{}", Scalar::zero(Q)), "0");
    }

    #[test]
    fn prime_field_inverse() {
        let gf7 = FieldDescriptor::prime_field(7).unwrap();
        let three = Scalar::from_integer(3, gf7);
        assert_eq!(three.inv().unwrap(), Scalar::from_integer(5, gf7));
        // 3 * 5 = 15 = 1 mod 7
        assert!(three.checked_mul(&three.inv().unwrap()).unwrap().is_one());
    }

    #[test]
    fn residues_canonicalize_into_range() {
        let gf5 = FieldDescriptor::prime_field(5).unwrap();
        assert_eq!(Scalar::residue(12, 5), Scalar::from_integer(2, gf5));
        assert_eq!(Scalar::from_integer(-1, gf5), Scalar::residue(4, 5));
        assert_eq!(format!("{}", Scalar::residue(9, 5)), "4");
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(Scalar::zero(Q).inv(), Err(ArithError::DivisionByZero));
        let gf5 = FieldDescriptor::prime_field(5).unwrap();
        assert_eq!(Scalar::zero(gf5).inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let gf5 = FieldDescriptor::prime_field(5).unwrap();
        let err = Scalar::one(Q).checked_add(&Scalar::one(gf5)).unwrap_err();
        assert_eq!(
            err,
            ArithError::FieldMismatch {
                left: Q,
                right: gf5,
            }
        );
    }

    #[test]
    #[should_panic(expected = "same field")]
    fn operator_panics_on_field_mismatch() {
        let gf5 = FieldDescriptor::prime_field(5).unwrap();
        let _ = &Scalar::one(Q) + &Scalar::one(gf5);
    }

    #[test]
    fn subtraction_wraps_in_prime_fields() {
        let gf5 = FieldDescriptor::prime_field(5).unwrap();
        let two = Scalar::from_integer(2, gf5);
        let four = Scalar::from_integer(4, gf5);
        assert_eq!(
            two.checked_sub(&four).unwrap(),
            Scalar::from_integer(3, gf5)
        );
        assert_eq!(two.negated(), Scalar::from_integer(3, gf5));
    }

    #[test]
    fn integer_reinterpretation_mod_p() {
        let seven = Scalar::from_integer(7, Q);
        assert_eq!(seven.to_prime_field(5).unwrap(), Scalar::residue(2, 5));
        let neg = Scalar::from_integer(-3, Q);
        assert_eq!(neg.to_prime_field(5).unwrap(), Scalar::residue(2, 5));
        let half = Scalar::rational(1, 2).unwrap();
        assert!(matches!(
            half.to_prime_field(5),
            Err(ArithError::NotAnInteger(_))
        ));
    }

    #[test]
    fn parsing_inverts_rendering() {
        let gf7 = FieldDescriptor::prime_field(7).unwrap();
        for (text, expected) in [
            ("5/6", Scalar::rational(5, 6).unwrap()),
            ("-1/2", Scalar::rational(-1, 2).unwrap()),
            ("3", Scalar::from_integer(3, Q)),
            ("-12", Scalar::from_integer(-12, Q)),
            ("2/4", Scalar::rational(1, 2).unwrap()),
        ] {
            assert_eq!(Scalar::parse(text, Q).unwrap(), expected);
        }
        assert_eq!(Scalar::parse("9", gf7).unwrap(), Scalar::residue(2, 7));
        assert_eq!(Scalar::parse("-1", gf7).unwrap(), Scalar::residue(6, 7));
        assert!(matches!(
            Scalar::parse("1/2", gf7),
            Err(ArithError::NotAnInteger(_))
        ));
        assert_eq!(Scalar::parse("1/0", Q), Err(ArithError::ZeroDenominator));
        assert!(matches!(
            Scalar::parse("x", Q),
            Err(ArithError::MalformedScalar(_))
        ));
        assert!(matches!(
            Scalar::parse("", Q),
            Err(ArithError::MalformedScalar(_))
        ));
        assert!(matches!(
            Scalar::parse("1/2/3", Q),
            Err(ArithError::MalformedScalar(_))
        ));
    }

    #[test]
    fn composite_moduli_are_rejected() {
        assert_eq!(
            FieldDescriptor::prime_field(6),
            Err(ArithError::NotPrime(6))
        );
        assert_eq!(
            FieldDescriptor::prime_field(1),
            Err(ArithError::NotPrime(1))
        );
        assert_eq!(
            FieldDescriptor::prime_field(0),
            Err(ArithError::NotPrime(0))
        );
        assert!(FieldDescriptor::prime_field(2).is_ok());
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(97));
        assert!(is_prime(4294967311)); // prime just above 2^32
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(!is_prime(561)); // Carmichael number
        assert!(!is_prime(4294967297)); // 641 * 6700417
        assert!(is_prime(18446744073709551557)); // largest u64 prime
    }
}
