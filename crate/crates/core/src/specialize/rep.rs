//! The regular representation of the cyclotomic quotient at a parameter
//! point, with centre and subalgebra dimensions.

use crate::affine::{XMonomial, XPoly};
use crate::coeffring::CoeffPoly;
use crate::cyclotomic::{CycloElement, Quotient, RestrictedPoly};
use crate::error::{Error, Result};

use super::field::{Field, ParamPoint};
use super::linalg::{mat_vec, nullspace, Matrix, Span};

/// Basis `X1^i X2^j T^ε` of the quotient, sorted by `(ε, i, j)`; dimension
/// `2 m^2` as a free module.
#[derive(Debug, Clone)]
pub struct LinearRep {
    m: usize,
    basis: Vec<(u8, i64, i64)>,
}

impl LinearRep {
    pub fn new(m: usize) -> Self {
        let mi = m as i64;
        let basis = (0..2u8)
            .flat_map(|eps| (0..mi).flat_map(move |i| (0..mi).map(move |j| (eps, i, j))))
            .collect();
        LinearRep { m, basis }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[(u8, i64, i64)] {
        &self.basis
    }

    pub fn basis_element(&self, k: usize) -> CycloElement {
        let (eps, i, j) = self.basis[k];
        let p = RestrictedPoly::new(XPoly::monomial(self.m, i, j)).expect("restricted");
        if eps == 0 {
            CycloElement::from_poly(p)
        } else {
            CycloElement::times_t(p)
        }
    }

    fn index(&self, eps: u8, mono: &XMonomial) -> usize {
        let m = self.m;
        eps as usize * m * m + mono.i as usize * m + mono.j as usize
    }

    /// Coordinates of `c` in the basis.
    pub fn coords(&self, c: &CycloElement) -> Vec<CoeffPoly> {
        let mut v = vec![CoeffPoly::zero(self.m); self.dimension()];
        for (eps, part) in [(0u8, &c.f), (1u8, &c.g)] {
            for (mono, coeff) in part.as_poly().terms() {
                v[self.index(eps, mono)] = coeff.clone();
            }
        }
        v
    }

    /// Symbolic matrix of `y ↦ x y` (column `k` holds `x · b_k`).
    pub fn left_mult_symbolic(
        &self,
        quot: &Quotient,
        x: &CycloElement,
    ) -> Result<Matrix<CoeffPoly>> {
        self.mult_symbolic(quot, |b| quot.mul(x, b))
    }

    /// Symbolic matrix of `y ↦ y x`.
    pub fn right_mult_symbolic(
        &self,
        quot: &Quotient,
        x: &CycloElement,
    ) -> Result<Matrix<CoeffPoly>> {
        self.mult_symbolic(quot, |b| quot.mul(b, x))
    }

    fn mult_symbolic(
        &self,
        quot: &Quotient,
        op: impl Fn(&CycloElement) -> Result<CycloElement>,
    ) -> Result<Matrix<CoeffPoly>> {
        if quot.m() != self.m {
            return Err(Error::RingMismatch {
                left: self.m,
                right: quot.m(),
            });
        }
        let n = self.dimension();
        let mut out = vec![vec![CoeffPoly::zero(self.m); n]; n];
        for k in 0..n {
            let col = self.coords(&op(&self.basis_element(k))?);
            for (row, c) in out.iter_mut().zip(col) {
                row[k] = c;
            }
        }
        Ok(out)
    }
}

pub fn evaluate_matrix<F: Field>(
    a: &Matrix<CoeffPoly>,
    at: &ParamPoint<F>,
) -> Result<Matrix<F::Elem>> {
    a.iter()
        .map(|row| row.iter().map(|c| c.evaluate(at)).collect())
        .collect()
}

pub fn evaluate_vector<F: Field>(v: &[CoeffPoly], at: &ParamPoint<F>) -> Result<Vec<F::Elem>> {
    v.iter().map(|c| c.evaluate(at)).collect()
}

/// The `2m^2 × 2m^2` matrix of left multiplication by `x` at `at`.
pub fn left_mult_matrix<F: Field>(
    quot: &Quotient,
    x: &CycloElement,
    at: &ParamPoint<F>,
) -> Result<Matrix<F::Elem>> {
    let rep = LinearRep::new(quot.m());
    evaluate_matrix(&rep.left_mult_symbolic(quot, x)?, at)
}

/// The linear system `c ↦ ([c, T], [c, X1])`, kept symbolic so that it can be
/// specialized at many points.
#[derive(Debug, Clone)]
pub struct CommutatorSystem {
    rep: LinearRep,
    /// `4m^2 × 2m^2`: rows of `R_T - L_T` followed by rows of `R_X1 - L_X1`.
    rows: Matrix<CoeffPoly>,
}

impl CommutatorSystem {
    pub fn new(quot: &Quotient) -> Result<Self> {
        let rep = LinearRep::new(quot.m());
        let mut rows = Vec::new();
        for gen in [quot.t(), quot.x1()] {
            let l = rep.left_mult_symbolic(quot, &gen)?;
            let r = rep.right_mult_symbolic(quot, &gen)?;
            rows.extend(
                r.into_iter()
                    .zip(l)
                    .map(|(rr, lr)| rr.iter().zip(&lr).map(|(a, b)| a - b).collect()),
            );
        }
        Ok(CommutatorSystem { rep, rows })
    }

    pub fn rep(&self) -> &LinearRep {
        &self.rep
    }

    /// The specialized commutator matrix.
    pub fn matrix<F: Field>(&self, at: &ParamPoint<F>) -> Result<Matrix<F::Elem>> {
        evaluate_matrix(&self.rows, at)
    }

    /// A basis of the centre of the specialized algebra.
    pub fn centre_nullspace<F: Field>(&self, at: &ParamPoint<F>) -> Result<Vec<Vec<F::Elem>>> {
        Ok(nullspace(
            at.field(),
            &self.matrix(at)?,
            self.rep.dimension(),
        ))
    }

    pub fn centre_dimension<F: Field>(&self, at: &ParamPoint<F>) -> Result<usize> {
        Ok(self.centre_nullspace(at)?.len())
    }

    /// Whether the specialized vector `v` is central.
    pub fn is_central_at<F: Field>(&self, v: &[F::Elem], at: &ParamPoint<F>) -> Result<bool> {
        let field = at.field();
        Ok(mat_vec(field, &self.matrix(at)?, v)
            .iter()
            .all(|x| field.is_zero(x)))
    }
}

/// Dimension of the centre of the quotient specialized at `at`.
pub fn centre_dimension<F: Field>(quot: &Quotient, at: &ParamPoint<F>) -> Result<usize> {
    CommutatorSystem::new(quot)?.centre_dimension(at)
}

/// Outcome of a subalgebra closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub dimension: usize,
    /// Number of rounds until the span stopped growing.
    pub rounds: usize,
    /// Span dimension after each round, starting from `span{1}`.
    pub history: Vec<usize>,
}

/// Closure of `span{1}` under left multiplication by the generators, which is
/// the unital subalgebra they generate.
pub fn subalgebra_closure<F: Field>(
    quot: &Quotient,
    generators: &[CycloElement],
    at: &ParamPoint<F>,
) -> Result<Closure> {
    let rep = LinearRep::new(quot.m());
    let field = at.field();
    let mats = generators
        .iter()
        .map(|g| left_mult_matrix(quot, g, at))
        .collect::<Result<Vec<_>>>()?;

    let mut span = Span::new(field.clone());
    let one = evaluate_vector(&rep.coords(&quot.one()), at)?;
    span.insert(&one);
    let mut frontier = vec![one];
    let mut history = vec![span.dim()];
    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        let mut next = Vec::new();
        for v in &frontier {
            for a in &mats {
                let w = mat_vec(field, a, v);
                if span.insert(&w) {
                    next.push(w);
                }
            }
        }
        history.push(span.dim());
        frontier = next;
        if rounds > rep.dimension() + 1 {
            return Err(Error::Invariant(
                "subalgebra closure did not stabilize".into(),
            ));
        }
    }
    Ok(Closure {
        dimension: span.dim(),
        rounds,
        history,
    })
}

pub fn subalgebra_dimension<F: Field>(
    quot: &Quotient,
    generators: &[CycloElement],
    at: &ParamPoint<F>,
) -> Result<usize> {
    Ok(subalgebra_closure(quot, generators, at)?.dimension)
}

/// Generators of the image of the symmetric Laurent polynomials:
/// `X1 + X2`, `X1 X2` and `(X1 X2)^{-1}`.
pub fn symmetric_generators(quot: &Quotient) -> Result<Vec<CycloElement>> {
    let m = quot.m();
    Ok(vec![
        quot.reduce_poly(&(&XPoly::x1(m) + &XPoly::x2(m)))?,
        quot.reduce_poly(&XPoly::monomial(m, 1, 1))?,
        quot.reduce_poly(&XPoly::monomial(m, -1, -1))?,
    ])
}
