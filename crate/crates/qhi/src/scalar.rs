//! Complex scalars in two modes: fast `f64` complex numbers and exact
//! Gaussian rationals. Decorations built in the exact mode make transit
//! round-trips and cocycle identities testable with no tolerance at all.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Exact complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRational {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

/// A complex scalar, either floating (`F`) or exact Gaussian rational (`Q`).
///
/// Arithmetic between the two modes is a programming error and panics;
/// a decoration is uniformly one mode.
#[derive(Clone, Debug, PartialEq)]
pub enum Cx {
    F(Complex64),
    Q(GaussRational),
}

impl Cx {
    pub fn f(re: f64, im: f64) -> Self {
        Cx::F(Complex64::new(re, im))
    }

    pub fn q(re: i64, im: i64) -> Self {
        Cx::Q(GaussRational::from_ints(re, im))
    }

    /// Exact rational `re_n/re_d + (im_n/im_d) i`.
    pub fn q_ratio(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> Self {
        Cx::Q(GaussRational::new(
            BigRational::new(BigInt::from(re_n), BigInt::from(re_d)),
            BigRational::new(BigInt::from(im_n), BigInt::from(im_d)),
        ))
    }

    pub fn zero_like(&self) -> Self {
        match self {
            Cx::F(_) => Cx::f(0.0, 0.0),
            Cx::Q(_) => Cx::q(0, 0),
        }
    }

    pub fn one_like(&self) -> Self {
        match self {
            Cx::F(_) => Cx::f(1.0, 0.0),
            Cx::Q(_) => Cx::q(1, 0),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Cx::Q(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Cx::F(z) => z.re == 0.0 && z.im == 0.0,
            Cx::Q(q) => q.is_zero(),
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        match self {
            Cx::F(z) => *z,
            Cx::Q(q) => Complex64::new(
                q.re.to_f64().unwrap_or(f64::NAN),
                q.im.to_f64().unwrap_or(f64::NAN),
            ),
        }
    }

    pub fn add(&self, other: &Cx) -> Cx {
        match (self, other) {
            (Cx::F(a), Cx::F(b)) => Cx::F(a + b),
            (Cx::Q(a), Cx::Q(b)) => Cx::Q(GaussRational::new(&a.re + &b.re, &a.im + &b.im)),
            _ => panic!("mixed scalar modes"),
        }
    }

    pub fn sub(&self, other: &Cx) -> Cx {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cx {
        match self {
            Cx::F(a) => Cx::F(-a),
            Cx::Q(a) => Cx::Q(GaussRational::new(-&a.re, -&a.im)),
        }
    }

    pub fn mul(&self, other: &Cx) -> Cx {
        match (self, other) {
            (Cx::F(a), Cx::F(b)) => Cx::F(a * b),
            (Cx::Q(a), Cx::Q(b)) => Cx::Q(GaussRational::new(
                &a.re * &b.re - &a.im * &b.im,
                &a.re * &b.im + &a.im * &b.re,
            )),
            _ => panic!("mixed scalar modes"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Cx> {
        match self {
            Cx::F(a) => {
                if a.re == 0.0 && a.im == 0.0 {
                    None
                } else {
                    Some(Cx::F(a.inv()))
                }
            }
            Cx::Q(a) => {
                if a.is_zero() {
                    None
                } else {
                    let n = a.norm_sqr();
                    Some(Cx::Q(GaussRational::new(&a.re / &n, -&a.im / &n)))
                }
            }
        }
    }

    pub fn div(&self, other: &Cx) -> Option<Cx> {
        other.inv().map(|i| self.mul(&i))
    }

    pub fn conj(&self) -> Cx {
        match self {
            Cx::F(a) => Cx::F(a.conj()),
            Cx::Q(a) => Cx::Q(GaussRational::new(a.re.clone(), -&a.im)),
        }
    }

    /// |self - other| in the f64 image; exact equality reports 0.0.
    pub fn dist(&self, other: &Cx) -> f64 {
        match (self, other) {
            (Cx::Q(a), Cx::Q(b)) => {
                if a == b {
                    0.0
                } else {
                    (self.to_c64() - other.to_c64()).norm()
                }
            }
            _ => (self.to_c64() - other.to_c64()).norm(),
        }
    }

    pub fn approx_eq(&self, other: &Cx, tol: f64) -> bool {
        self.dist(other) <= tol
    }

    /// Deterministic byte key for multiset ordering across both modes.
    pub fn sort_key(&self) -> Vec<u8> {
        match self {
            Cx::F(z) => {
                let mut k = vec![0u8];
                k.extend_from_slice(&z.re.to_bits().to_be_bytes());
                k.extend_from_slice(&z.im.to_bits().to_be_bytes());
                k
            }
            Cx::Q(q) => {
                let mut k = vec![1u8];
                for r in [&q.re, &q.im] {
                    let s = format!("{}/{};", r.numer(), r.denom());
                    k.extend_from_slice(s.as_bytes());
                }
                k
            }
        }
    }
}

impl fmt::Display for Cx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cx::F(z) => write!(f, "{}", z),
            Cx::Q(q) => write!(f, "{}+{}i", q.re, q.im),
        }
    }
}

/// The group element `[[t, x], [0, 1/t]]` stored as its `(t, x)` entries.
#[derive(Clone, Debug, PartialEq)]
pub struct BorelValue {
    pub t: Cx,
    pub x: Cx,
}

impl BorelValue {
    pub fn new(t: Cx, x: Cx) -> Self {
        BorelValue { t, x }
    }

    pub fn identity_like(&self) -> Self {
        BorelValue {
            t: self.t.one_like(),
            x: self.t.zero_like(),
        }
    }

    /// Matrix product: `(t1,x1)(t2,x2) = (t1 t2, t1 x2 + x1/t2)`.
    pub fn compose(&self, other: &BorelValue) -> BorelValue {
        let t = self.t.mul(&other.t);
        let x = self
            .t
            .mul(&other.x)
            .add(&self.x.mul(&other.t.inv().expect("t is nonzero")));
        BorelValue { t, x }
    }

    /// Matrix inverse: `(t, x) -> (1/t, -x)`.
    pub fn inverse(&self) -> BorelValue {
        BorelValue {
            t: self.t.inv().expect("t is nonzero"),
            x: self.x.neg(),
        }
    }

    pub fn conj(&self) -> BorelValue {
        BorelValue {
            t: self.t.conj(),
            x: self.x.conj(),
        }
    }

    /// Full means the upper entry is nonzero.
    pub fn is_full(&self) -> bool {
        !self.x.is_zero()
    }

    pub fn approx_eq(&self, other: &BorelValue, tol: f64) -> bool {
        self.t.approx_eq(&other.t, tol) && self.x.approx_eq(&other.x, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_inverse_roundtrip() {
        let z = Cx::q_ratio(3, 7, -2, 5);
        let w = z.inv().unwrap();
        assert_eq!(z.mul(&w), Cx::q(1, 0));
    }

    #[test]
    fn borel_compose_matches_matrix_product() {
        let a = BorelValue::new(Cx::f(2.0, 1.0), Cx::f(-1.0, 3.0));
        let b = BorelValue::new(Cx::f(0.5, -0.3), Cx::f(2.0, 0.0));
        let c = a.compose(&b);
        // [[t1,x1],[0,1/t1]][[t2,x2],[0,1/t2]]
        let t1 = a.t.to_c64();
        let x1 = a.x.to_c64();
        let t2 = b.t.to_c64();
        let x2 = b.x.to_c64();
        assert!((c.t.to_c64() - t1 * t2).norm() < 1e-14);
        assert!((c.x.to_c64() - (t1 * x2 + x1 / t2)).norm() < 1e-14);
        let id = a.compose(&a.inverse());
        assert!(id.t.approx_eq(&Cx::f(1.0, 0.0), 1e-14));
        assert!(id.x.approx_eq(&Cx::f(0.0, 0.0), 1e-14));
    }

    #[test]
    fn exact_compose_inverse_is_identity() {
        let a = BorelValue::new(Cx::q_ratio(2, 3, 1, 1), Cx::q(5, -4));
        let id = a.compose(&a.inverse());
        assert_eq!(id.t, Cx::q(1, 0));
        assert_eq!(id.x, Cx::q(0, 0));
    }
}
