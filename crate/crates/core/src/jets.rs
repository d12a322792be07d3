//! Truncated Taylor series ("jets") in one variable.
//!
//! A [`Jet`] of order `m` stores the normalized coefficients
//! `c[k] = f^(k)(t0) / k!` for `k = 0..=m`. Binary operations truncate to the
//! smaller operand order; nothing is ever zero-padded.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    coeffs: Vec<f64>,
}

impl Jet {
    /// Builds a jet from normalized Taylor coefficients.
    ///
    /// Panics on an empty coefficient list; a jet always has order >= 0.
    pub fn new(coeffs: Vec<f64>) -> Jet {
        assert!(!coeffs.is_empty(), "a jet needs at least one coefficient");
        Jet { coeffs }
    }

    pub fn constant(value: f64, order: usize) -> Jet {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = value;
        Jet { coeffs }
    }

    pub fn zero(order: usize) -> Jet {
        Jet::constant(0.0, order)
    }

    pub fn one(order: usize) -> Jet {
        Jet::constant(1.0, order)
    }

    /// The identity function expanded at `t0`.
    pub fn variable(t0: f64, order: usize) -> Jet {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = t0;
        if order >= 1 {
            coeffs[1] = 1.0;
        }
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    /// Function value at the expansion point.
    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// The `k`-th derivative `k! * c[k]`, if `k <= order`.
    pub fn derivative(&self, k: usize) -> Option<f64> {
        let c = *self.coeffs.get(k)?;
        Some(c * (1..=k).map(|i| i as f64).product::<f64>())
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    pub fn truncate(&self, order: usize) -> Jet {
        let keep = (order + 1).min(self.coeffs.len());
        Jet {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    pub fn scale(&self, factor: f64) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Adds a constant to the value coefficient.
    pub fn offset(&self, delta: f64) -> Jet {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] += delta;
        Jet { coeffs }
    }

    /// Quotient `self / rhs`, defined when `rhs` has a non-zero constant term.
    pub fn div(&self, rhs: &Jet) -> Result<Jet> {
        let b0 = rhs.coeffs[0];
        if b0 == 0.0 {
            return Err(Error::DivisionByZeroConstantTerm);
        }
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut q = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= rhs.coeffs[j] * q[k - j];
            }
            q.push(acc / b0);
        }
        Ok(Jet { coeffs: q })
    }

    pub fn recip(&self) -> Result<Jet> {
        Jet::one(self.order()).div(self)
    }

    pub fn sqrt(&self) -> Result<Jet> {
        let a0 = self.coeffs[0];
        if !(a0 > 0.0) {
            return Err(Error::NonPositiveConstantTerm(a0));
        }
        let n = self.coeffs.len();
        let mut s = Vec::with_capacity(n);
        let s0 = a0.sqrt();
        s.push(s0);
        for k in 1..n {
            let mut acc = self.coeffs[k];
            for j in 1..k {
                acc -= s[j] * s[k - j];
            }
            s.push(acc / (2.0 * s0));
        }
        Ok(Jet { coeffs: s })
    }

    /// `exp` of the series, from `(exp a)' = a' exp a`.
    pub fn exp(&self) -> Jet {
        let n = self.coeffs.len();
        let mut e = Vec::with_capacity(n);
        e.push(self.coeffs[0].exp());
        for k in 1..n {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += j as f64 * self.coeffs[j] * e[k - j];
            }
            e.push(acc / k as f64);
        }
        Jet { coeffs: e }
    }

    /// `(sin a, cos a)` computed together.
    pub fn sin_cos(&self) -> (Jet, Jet) {
        let n = self.coeffs.len();
        let (s0, c0) = self.coeffs[0].sin_cos();
        let mut s = Vec::with_capacity(n);
        let mut c = Vec::with_capacity(n);
        s.push(s0);
        c.push(c0);
        for k in 1..n {
            let mut ds = 0.0;
            let mut dc = 0.0;
            for j in 1..=k {
                let w = j as f64 * self.coeffs[j];
                ds += w * c[k - j];
                dc -= w * s[k - j];
            }
            s.push(ds / k as f64);
            c.push(dc / k as f64);
        }
        (Jet { coeffs: s }, Jet { coeffs: c })
    }

    /// Derivative with respect to the expansion variable; order drops by one.
    pub fn differentiate(&self) -> Result<Jet> {
        if self.order() == 0 {
            return Err(Error::OrderExhausted);
        }
        Ok(Jet {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| (k + 1) as f64 * c)
                .collect(),
        })
    }

    fn zip_with(&self, rhs: &Jet, op: impl Fn(f64, f64) -> f64) -> Jet {
        Jet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| op(*a, *b))
                .collect(),
        }
    }

    fn cauchy(&self, rhs: &Jet) -> Jet {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| (0..=k).map(|j| self.coeffs[j] * rhs.coeffs[k - j]).sum())
            .collect();
        Jet { coeffs }
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        self.cauchy(rhs)
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Jet {
            type Output = Jet;
            fn $method(self, rhs: Jet) -> Jet {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Jet> for Jet {
            type Output = Jet;
            fn $method(self, rhs: &Jet) -> Jet {
                (&self).$method(rhs)
            }
        }
        impl $tr<Jet> for &Jet {
            type Output = Jet;
            fn $method(self, rhs: Jet) -> Jet {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        -&self
    }
}

/// A plane-curve germ: jets of both coordinates at one parameter value.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneJet {
    pub x: Jet,
    pub y: Jet,
}

impl PlaneJet {
    /// Pairs two jets, truncating the longer one so both share an order.
    pub fn new(x: Jet, y: Jet) -> PlaneJet {
        let order = x.order().min(y.order());
        PlaneJet {
            x: x.truncate(order),
            y: y.truncate(order),
        }
    }

    pub fn order(&self) -> usize {
        self.x.order()
    }

    pub fn position(&self) -> [f64; 2] {
        [self.x.value(), self.y.value()]
    }

    /// First derivative `(x', y')`, if the order allows it.
    pub fn velocity(&self) -> Option<[f64; 2]> {
        Some([self.x.derivative(1)?, self.y.derivative(1)?])
    }

    pub fn acceleration(&self) -> Option<[f64; 2]> {
        Some([self.x.derivative(2)?, self.y.derivative(2)?])
    }

    pub fn speed(&self) -> Option<f64> {
        self.velocity().map(|[dx, dy]| dx.hypot(dy))
    }

    /// Signed curvature `(x'y'' - y'x'') / |v|^3`; needs order >= 2.
    pub fn curvature(&self) -> Option<f64> {
        let [dx, dy] = self.velocity()?;
        let [ddx, ddy] = self.acceleration()?;
        let speed = dx.hypot(dy);
        Some((dx * ddy - dy * ddx) / (speed * speed * speed))
    }

    pub fn differentiate(&self) -> Result<PlaneJet> {
        Ok(PlaneJet {
            x: self.x.differentiate()?,
            y: self.y.differentiate()?,
        })
    }

    pub fn translate(&self, dx: f64, dy: f64) -> PlaneJet {
        PlaneJet {
            x: self.x.offset(dx),
            y: self.y.offset(dy),
        }
    }

    pub fn truncate(&self, order: usize) -> PlaneJet {
        PlaneJet {
            x: self.x.truncate(order),
            y: self.y.truncate(order),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}
