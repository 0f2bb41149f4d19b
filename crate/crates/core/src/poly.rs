//! Exact bivariate polynomials and the coordinate changes between the
//! lattice-point invariant and the Tutte polynomial.
//!
//! Coefficients are arbitrary-precision integers. Rational-function
//! substitutions never leave the polynomial ring: they are performed by
//! homogenizing against an explicit denominator polynomial with a tracked
//! exponent, so a failed exact division is a meaningful integrity signal
//! rather than a rounding artifact.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Monomial key: degrees in the two variables.
pub type Exponents = (u32, u32);

/// A bivariate polynomial with exact integer coefficients and named
/// variables. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePolynomial {
    vars: (String, String),
    terms: BTreeMap<Exponents, BigInt>,
}

/// Canonical term order for printing: total degree descending, then
/// x-degree descending.
fn print_order(a: &Exponents, b: &Exponents) -> std::cmp::Ordering {
    let ta = a.0 + a.1;
    let tb = b.0 + b.1;
    tb.cmp(&ta).then(b.0.cmp(&a.0))
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::zero_in("x", "y")
    }

    pub fn zero_in(x: &str, y: &str) -> Self {
        BivariatePolynomial {
            vars: (x.to_string(), y.to_string()),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0), BigInt::from(c));
        p
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The monomial `c * x^i * y^j`.
    pub fn monomial(c: i64, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), BigInt::from(c));
        p
    }

    pub fn var_x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn var_y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn rename(mut self, x: &str, y: &str) -> Self {
        self.vars = (x.to_string(), y.to_string());
        self
    }

    pub fn vars(&self) -> (&str, &str) {
        (&self.vars.0, &self.vars.1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Largest total degree among stored terms; zero polynomial has 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(
                self.vars.0.clone(),
                self.vars.1.clone(),
                other.vars.0.clone(),
                other.vars.1.clone(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Ok(self * other)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one().rename(&self.vars.0, &self.vars.1);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero_in(&self.vars.0, &self.vars.1);
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    pub fn evaluate_int(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * x.pow(i) * y.pow(j);
        }
        acc
    }

    pub fn evaluate(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            acc += BigRational::from(c.clone()) * x.pow(i as i32) * y.pow(j as i32);
        }
        acc
    }

    /// Swaps the roles of the two variables.
    pub fn swap_vars(&self) -> Self {
        let mut out = Self::zero_in(&self.vars.0, &self.vars.1);
        for (&(i, j), c) in &self.terms {
            out.add_term((j, i), c.clone());
        }
        out
    }

    /// Substitutes `x -> sx*x, y -> sy*y` with `sx, sy ∈ {1,-1}`.
    pub fn flip_signs(&self, sx: bool, sy: bool) -> Self {
        let mut out = Self::zero_in(&self.vars.0, &self.vars.1);
        for (&(i, j), c) in &self.terms {
            let mut v = c.clone();
            if sx && i % 2 == 1 {
                v = -v;
            }
            if sy && j % 2 == 1 {
                v = -v;
            }
            out.add_term((i, j), v);
        }
        out
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    /// The homogeneous part of highest total degree.
    pub fn top_degree_part(&self) -> Self {
        let d = self.total_degree();
        let mut out = Self::zero_in(&self.vars.0, &self.vars.1);
        for (&e, c) in &self.terms {
            if e.0 + e.1 == d {
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Substitutes the rational pair `x -> xn/d`, `y -> yn/d` and clears
    /// the denominator: returns `(Σ c_ij xn^i yn^j d^(N-i-j), N)` where `N`
    /// is the total degree of `self`.
    pub fn substitute_homogenized(&self, x_num: &Self, y_num: &Self, denom: &Self) -> (Self, u32) {
        let n = self.total_degree();
        let mut acc = Self::zero_in(&self.vars.0, &self.vars.1);
        for (&(i, j), c) in &self.terms {
            let term = &(&x_num.pow(i) * &y_num.pow(j)) * &denom.pow(n - i - j);
            acc = &acc + &term.scale(c);
        }
        (acc, n)
    }

    /// Exact division; `None` when the division leaves a remainder.
    ///
    /// Greedy cancellation of leading terms under the graded-lex order is
    /// sound for an exact-divisibility test against a single divisor.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let lead = |p: &Self| -> Exponents {
            *p.terms
                .keys()
                .max_by(|a, b| print_order(b, a))
                .expect("nonzero polynomial")
        };
        let dlead = lead(divisor);
        let dcoeff = divisor.terms[&dlead].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero_in(&self.vars.0, &self.vars.1);
        while !rem.is_zero() {
            let rlead = lead(&rem);
            if rlead.0 < dlead.0 || rlead.1 < dlead.1 {
                return None;
            }
            let rcoeff = rem.terms[&rlead].clone();
            let (q, r) = num_integer::Integer::div_rem(&rcoeff, &dcoeff);
            if !r.is_zero() {
                return None;
            }
            let shift = (rlead.0 - dlead.0, rlead.1 - dlead.1);
            quot.add_term(shift, q.clone());
            let mut piece = Self::zero_in(&self.vars.0, &self.vars.1);
            piece.add_term(shift, q);
            rem = &rem - &(&piece * divisor);
        }
        Some(quot)
    }

    /// Exact division by the monomial `x^i y^j`.
    pub fn div_monomial(&self, i: u32, j: u32) -> Option<Self> {
        let mut out = Self::zero_in(&self.vars.0, &self.vars.1);
        for (&(a, b), c) in &self.terms {
            if a < i || b < j {
                return None;
            }
            out.add_term((a - i, b - j), c.clone());
        }
        Some(out)
    }

    pub fn mul_monomial(&self, i: u32, j: u32) -> Self {
        let mut out = Self::zero_in(&self.vars.0, &self.vars.1);
        for (&(a, b), c) in &self.terms {
            out.add_term((a + i, b + j), c.clone());
        }
        out
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: Self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero_in(&self.vars.0, &self.vars.1);
        for (&(a, b), c) in &self.terms {
            for (&(i, j), d) in &rhs.terms {
                out.add_term((a + i, b + j), c * d);
            }
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero_in(&self.vars.0, &self.vars.1);
        for (&e, c) in &self.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl std::fmt::Display for BivariatePolynomial {
    /// Canonical text form, bit-exact across platforms: terms in the
    /// canonical order, `2*x*y`-style monomials, carets for exponents.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Exponents> = self.terms.keys().collect();
        keys.sort_by(|a, b| print_order(a, b));
        for (idx, e) in keys.iter().enumerate() {
            let c = &self.terms[e];
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut pieces: Vec<String> = Vec::new();
            if !abs.is_one() || (e.0 == 0 && e.1 == 0) {
                pieces.push(abs.to_string());
            }
            for (var, &deg) in [(&self.vars.0, &e.0), (&self.vars.1, &e.1)] {
                match deg {
                    0 => {}
                    1 => pieces.push(var.clone()),
                    d => pieces.push(format!("{var}^{d}")),
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

/// Recovers the lattice-point invariant from a Tutte polynomial:
/// `x^(n-r) y^r / (x+y-1) * T((x+y-1)/y, (x+y-1)/x)`, with every division
/// performed exactly in the integer polynomial ring.
pub fn qprime_from_tutte(t: &BivariatePolynomial, n: usize, r: i64) -> Result<BivariatePolynomial> {
    let x = BivariatePolynomial::var_x();
    let y = BivariatePolynomial::var_y();
    let unit = &(&x + &y) - &BivariatePolynomial::one();
    // Common denominator x*y:  (x+y-1)/y = x(x+y-1)/xy,  (x+y-1)/x = y(x+y-1)/xy.
    let xn = &x * &unit;
    let yn = &y * &unit;
    let d = &x * &y;
    let (numer, cleared) = t.substitute_homogenized(&xn, &yn, &d);
    let shifted = numer.mul_monomial((n as i64 - r) as u32, r as u32);
    let divided = shifted
        .div_exact(&unit)
        .ok_or_else(|| Error::NotDivisible("x + y - 1".into()))?;
    divided
        .div_monomial(cleared, cleared)
        .ok_or_else(|| Error::NotDivisible(format!("(x*y)^{cleared}")))
}

/// Recovers the Tutte polynomial from the lattice-point invariant:
/// `-(xy-x-y)^(n-1) / ((-y)^(r-1) (-x)^(n-r-1)) * Q'(-x/(xy-x-y), -y/(xy-x-y))`.
///
/// Negative monomial exponents move to the numerator; all divisions are
/// exact or the input was not an invariant for the parameters `(n, r)`.
pub fn tutte_from_qprime(
    qp: &BivariatePolynomial,
    n: usize,
    r: i64,
) -> Result<BivariatePolynomial> {
    let x = BivariatePolynomial::var_x();
    let y = BivariatePolynomial::var_y();
    let d = &(&(&x * &y) - &x) - &y; // xy - x - y
    let (numer, cleared) = qp.substitute_homogenized(&-&x, &-&y, &d);

    // Assemble (-1) * d^(n-1) * numer / (d^cleared * (-y)^(r-1) * (-x)^(n-r-1)).
    let mut num = numer.scale(&BigInt::from(-1));
    let mut sign = 1i64;
    let d_exp = n as i64 - 1 - cleared as i64;
    if d_exp >= 0 {
        num = &num * &d.pow(d_exp as u32);
    }
    let (mut x_up, mut x_down) = (0i64, n as i64 - r - 1);
    let (mut y_up, mut y_down) = (0i64, r - 1);
    if x_down < 0 {
        x_up = -x_down;
        x_down = 0;
    }
    if y_down < 0 {
        y_up = -y_down;
        y_down = 0;
    }
    sign *= if (x_down + x_up + y_down + y_up) % 2 == 1 {
        -1
    } else {
        1
    };
    num = num.mul_monomial(x_up as u32, y_up as u32);
    if sign < 0 {
        num = num.scale(&BigInt::from(-1));
    }

    let num = if d_exp < 0 {
        num.div_exact(&d.pow((-d_exp) as u32))
            .ok_or_else(|| Error::NotDivisible(format!("(x*y - x - y)^{}", -d_exp)))?
    } else {
        num
    };
    num.div_monomial(x_down as u32, y_down as u32)
        .ok_or_else(|| Error::NotDivisible(format!("x^{x_down}*y^{y_down}")))
}
