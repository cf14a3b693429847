//! Scalars of the form `a + b sqrt(d)` with rational `a`, `b` and a shared
//! positive rational context `d`.

use std::fmt;

use num_traits::Zero;

use super::{parse_rational, FieldScalar, Matrix, Rational};

/// One element of the quadratic extension. Equality is componentwise, so
/// two values are equal only when both parts and the context agree; this
/// stays meaningful even when `d` happens to be a perfect square (the
/// representation is then redundant but never wrong).
#[derive(Clone, PartialEq, Eq)]
pub struct Quad {
    pub a: Rational,
    pub b: Rational,
    pub d: Rational,
}

impl Quad {
    pub fn new(a: Rational, b: Rational, d: Rational) -> Self {
        assert!(d > Rational::zero(), "quadratic context must be positive");
        Quad { a, b, d }
    }

    pub fn from_rational(a: Rational, d: Rational) -> Self {
        Quad::new(a, Rational::zero(), d)
    }

    pub fn conjugate(&self) -> Quad {
        Quad {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// Field norm `a^2 - b^2 d`; zero exactly for the zero divisors of a
    /// degenerate (perfect-square) context.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * &self.d
    }

    fn check(&self, other: &Quad) {
        assert_eq!(
            self.d, other.d,
            "mixed quadratic contexts: sqrt({}) vs sqrt({})",
            self.d, other.d
        );
    }
}

impl FieldScalar for Quad {
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }

    fn add(&self, other: &Self) -> Self {
        self.check(other);
        Quad {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d.clone(),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Quad {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d.clone(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        Quad {
            a: &self.a * &other.a + &self.b * &other.b * &self.d,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d.clone(),
        }
    }

    fn div(&self, other: &Self) -> Self {
        self.check(other);
        let n = other.norm();
        assert!(
            !Zero::is_zero(&n),
            "division by a zero divisor in a perfect-square context"
        );
        let conj = other.conjugate();
        let num = self.mul(&conj);
        Quad {
            a: num.a / &n,
            b: num.b / &n,
            d: self.d.clone(),
        }
    }

    fn zero_like(&self) -> Self {
        Quad {
            a: Rational::zero(),
            b: Rational::zero(),
            d: self.d.clone(),
        }
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            return write!(f, "{}", self.a);
        }
        if self.b < Rational::zero() {
            write!(f, "{}-{}*sqrt({})", self.a, -self.b.clone(), self.d)
        } else {
            write!(f, "{}+{}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Entry grammar: `p/q`, `p/q+r/s*sqrt(D)`, or `p/q-r/s*sqrt(D)`. A plain
/// rational comes back with `d = 0` and inherits the matrix context.
pub(super) fn parse_quad(tok: &str) -> Result<Quad, String> {
    match tok.find("*sqrt(") {
        None => {
            let a = parse_rational(tok)?;
            Ok(Quad {
                a,
                b: Rational::zero(),
                d: Rational::zero(),
            })
        }
        Some(star) => {
            if !tok.ends_with(')') {
                return Err(format!("unterminated sqrt in '{tok}'"));
            }
            let d = parse_rational(&tok[star + 6..tok.len() - 1])?;
            let head = &tok[..star];
            // split the b part off at the last +/- that is not a leading sign
            let mut split = None;
            for (i, c) in head.char_indices().skip(1) {
                if (c == '+' || c == '-') && !head[..i].ends_with('/') {
                    split = Some(i);
                }
            }
            let (a, b) = match split {
                None => (Rational::zero(), parse_rational(head)?),
                Some(i) => {
                    let a = parse_rational(&head[..i])?;
                    let sign = if head.as_bytes()[i] == b'-' { -1 } else { 1 };
                    let b = parse_rational(&head[i + 1..])?;
                    (a, b * Rational::from_integer(sign.into()))
                }
            };
            if d <= Rational::zero() {
                return Err(format!("sqrt context must be positive in '{tok}'"));
            }
            Ok(Quad { a, b, d })
        }
    }
}

impl Matrix<Quad> {
    /// Lift a rational matrix into the context `d` (no sqrt part).
    pub fn lift(m: &Matrix<Rational>, d: &Rational) -> Matrix<Quad> {
        m.map(|x| Quad::from_rational(x.clone(), d.clone()))
    }

    /// Lift with every entry multiplied by `sqrt(d)`: entry `x` becomes
    /// `x * sqrt(d)`.
    pub fn lift_sqrt(m: &Matrix<Rational>, d: &Rational) -> Matrix<Quad> {
        m.map(|x| Quad::new(Rational::zero(), x.clone(), d.clone()))
    }

    pub fn quad_identity(n: usize, d: &Rational) -> Matrix<Quad> {
        Matrix::lift(&Matrix::identity(n), d)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio, sqrt_exact};
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64)) -> Quad {
        Quad::new(ratio(a.0, a.1), ratio(b.0, b.1), rat(2))
    }

    #[test]
    fn ring_identities() {
        let x = q((1, 2), (3, 1));
        let y = q((-2, 3), (1, 5));
        let z = q((7, 4), (-1, 2));
        let lhs = x.mul(&y).mul(&z);
        let rhs = x.mul(&y.mul(&z));
        assert_eq!(lhs, rhs);
        assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        // (a + b sqrt d)(a - b sqrt d) = a^2 - b^2 d
        let prod = x.mul(&x.conjugate());
        assert_eq!(prod.a, x.norm());
        assert!(Zero::is_zero(&prod.b));
    }

    #[test]
    fn division_in_a_true_field() {
        let x = q((5, 3), (-7, 2));
        let y = q((0, 1), (1, 1)); // sqrt(2)
        let ratio = x.div(&y);
        assert_eq!(ratio.mul(&y), x);
    }

    #[test]
    #[should_panic]
    fn zero_divisor_division_panics() {
        // context 4 is a perfect square; 2 - sqrt(4) has norm 0
        let bad = Quad::new(rat(2), rat(-1), rat(4));
        let one = Quad::from_rational(rat(1), rat(4));
        let _ = one.div(&bad);
    }

    #[test]
    #[should_panic]
    fn mixed_contexts_panic() {
        let x = Quad::from_rational(rat(1), rat(2));
        let y = Quad::from_rational(rat(1), rat(3));
        let _ = x.add(&y);
    }

    #[test]
    fn display_and_parse() {
        let x = Quad::new(ratio(1, 2), ratio(-3, 10), ratio(49, 9));
        assert_eq!(x.to_string(), "1/2-3/10*sqrt(49/9)");
        assert_eq!(parse_quad(&x.to_string()).unwrap(), x);
        let y = Quad::new(rat(0), ratio(2, 5), rat(2));
        assert_eq!(y.to_string(), "0+2/5*sqrt(2)");
        assert_eq!(parse_quad("2/5*sqrt(2)").unwrap().b, ratio(2, 5));
        assert_eq!(parse_quad("-5").unwrap().a, rat(-5));
        assert_eq!(parse_quad("-1/2-1/3*sqrt(5)").unwrap().a, ratio(-1, 2));
        assert!(parse_quad("1*sqrt(2").is_err());
        assert!(parse_quad("1*sqrt(-2)").is_err());
    }

    #[test]
    fn quad_rank_in_field_context() {
        // [[sqrt2, 1], [1, sqrt2/2]] has rank 1 since sqrt2 * sqrt2/2 = 1
        let d = rat(2);
        let m = Matrix::from_rows(vec![
            vec![Quad::new(rat(0), rat(1), d.clone()), Quad::from_rational(rat(1), d.clone())],
            vec![
                Quad::from_rational(rat(1), d.clone()),
                Quad::new(rat(0), ratio(1, 2), d.clone()),
            ],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.nullity(), 1);
    }

    #[test]
    fn quad_rank_in_degenerate_context_evaluates() {
        // context 49/9: sqrt = 7/3, so 7/3 - sqrt(d) is a nonzero
        // representation of zero after evaluation
        let d = ratio(49, 9);
        let s = sqrt_exact(&d).unwrap();
        let zeroish = Quad::new(s, rat(-1), d.clone());
        let m = Matrix::from_rows(vec![vec![zeroish]]).unwrap();
        assert_eq!(m.rank(), 0);
    }
}
