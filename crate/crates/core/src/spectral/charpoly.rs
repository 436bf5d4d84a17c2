//! Exact characteristic polynomials det(xI − A) over the integers, and exact
//! comparison of their largest roots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::graph::{BitIter, Graph};

/// Monic integer polynomial, highest-degree coefficient first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

/// det(xI − A(G)) by Faddeev–LeVerrier in exact integer arithmetic.
///
/// The recurrence M_k = A M_{k−1} + c_{k−1} I, c_k = −tr(A M_k)/k divides
/// exactly at every step because the c_k are integers.
pub fn char_poly(g: &Graph) -> CharPoly {
    let n = g.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for u in BitIter(g.neighbor_mask(i)) {
                for (j, cell) in row.iter_mut().enumerate() {
                    if !m[u][j].is_zero() {
                        *cell += &m[u][j];
                    }
                }
            }
            row[i] += &coeffs[k - 1];
        }
        // tr(A M_k) = sum_i sum_{u ~ i} M_k[u][i]
        let mut tr = BigInt::zero();
        for i in 0..n {
            for u in BitIter(g.neighbor_mask(i)) {
                tr += &next[u][i];
            }
        }
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs[k] = -q;
        m = next;
    }
    CharPoly { coeffs }
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, x^n first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as i64 when they all fit.
    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs_f64().iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    pub fn eval(&self, x: f64) -> f64 {
        crate::poly::eval(&self.coeffs_f64(), x)
    }

    /// Largest real root. Graph characteristic polynomials are real-rooted, so
    /// Newton's method started above every root decreases monotonically onto it.
    pub fn largest_root(&self) -> f64 {
        let c = self.coeffs_f64();
        if c.len() == 1 {
            return f64::NAN;
        }
        let d = crate::poly::derivative(&c);
        let mut x = crate::poly::root_bound(&c);
        for _ in 0..10_000 {
            let fd = crate::poly::eval(&d, x);
            if fd == 0.0 {
                break;
            }
            let step = crate::poly::eval(&c, x) / fd;
            let next = x - step;
            if !(next < x) {
                break;
            }
            x = next;
        }
        x
    }

    fn to_q(&self) -> QPoly {
        QPoly::from_ints(&self.coeffs)
    }

    /// Number of distinct real roots strictly greater than `a`.
    pub fn count_roots_above(&self, a: f64) -> usize {
        let a = BigRational::from_float(a).expect("finite bound");
        self.to_q().count_roots_above(&a)
    }

    /// Exact test that both polynomials have the same largest real root.
    ///
    /// Identical polynomials agree trivially. Otherwise an interval (a, ∞)
    /// is chosen that isolates each polynomial's largest root (checked by
    /// Sturm counts in exact rational arithmetic); the roots coincide exactly
    /// when the gcd of the two polynomials also has a root there.
    pub fn same_largest_root(&self, other: &CharPoly) -> bool {
        if self == other {
            return true;
        }
        let (r1, r2) = (self.largest_root(), other.largest_root());
        if (r1 - r2).abs() > 1e-6 * r1.abs().max(1.0) {
            return false;
        }
        let (p, q) = (self.to_q(), other.to_q());
        let g = p.gcd(&q);
        if g.degree() == 0 {
            return false;
        }
        let mut delta = 1e-6;
        for _ in 0..8 {
            let a = BigRational::from_float(r1.min(r2) - delta).expect("finite");
            if p.count_roots_above(&a) == 1 && q.count_roots_above(&a) == 1 {
                return g.count_roots_above(&a) >= 1;
            }
            delta *= 1e-3;
        }
        // Could not isolate; fall back to the numeric answer.
        (r1 - r2).abs() <= 1e-12 * r1.abs().max(1.0)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = d - i;
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_mag = !(mag.is_one() && p > 0);
            if show_mag {
                write!(f, "{mag}")?;
            }
            match p {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{p}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

/// Polynomial over Q, highest degree first, no leading zeros (except zero poly = []).
#[derive(Clone, Debug, PartialEq)]
struct QPoly(Vec<BigRational>);

impl QPoly {
    fn from_ints(c: &[BigInt]) -> Self {
        QPoly(c.iter().map(|x| BigRational::from_integer(x.clone())).collect()).trimmed()
    }

    fn trimmed(mut self) -> Self {
        let lead = self.0.iter().position(|c| !c.is_zero()).unwrap_or(self.0.len());
        self.0.drain(..lead);
        self
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn derivative(&self) -> QPoly {
        let d = self.degree();
        QPoly(
            self.0[..d]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(d - i)))
                .collect(),
        )
        .trimmed()
    }

    fn rem(&self, div: &QPoly) -> QPoly {
        let mut r = self.0.clone();
        let dl = div.0.len();
        while r.len() >= dl && !r.is_empty() {
            let factor = &r[0] / &div.0[0];
            for (i, d) in div.0.iter().enumerate() {
                let t = &factor * d;
                r[i] -= t;
            }
            r.remove(0);
            while r.first().is_some_and(|c| c.is_zero()) {
                r.remove(0);
            }
        }
        QPoly(r)
    }

    fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn sturm(&self) -> Vec<QPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let k = seq.len();
            let r = seq[k - 2].rem(&seq[k - 1]);
            let neg = QPoly(r.0.into_iter().map(|c| -c).collect());
            seq.push(neg);
        }
        seq.pop();
        seq
    }

    fn count_roots_above(&self, a: &BigRational) -> usize {
        if self.degree() == 0 {
            return 0;
        }
        let seq = self.sturm();
        let at_a: Vec<BigRational> = seq.iter().map(|p| p.eval(a)).collect();
        let at_inf: Vec<BigRational> = seq.iter().map(|p| p.0[0].clone()).collect();
        let changes = |vals: &[BigRational]| {
            let signs: Vec<bool> = vals
                .iter()
                .filter(|v| !v.is_zero())
                .map(|v| v.is_positive())
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        // Roots in (a, inf) = V(a) - V(inf), valid when a is not a root.
        let va = changes(&at_a);
        let vi = changes(&at_inf);
        va.saturating_sub(vi)
    }
}
