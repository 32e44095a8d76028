//! The operators `d` and `φ` and the centre basis `{m_ij} ∪ {p_k T}`.

use crate::affine::{XMonomial, XPoly};
use crate::coeffring::CoeffPoly;
use crate::error::{check_rank, Error, Result};

use super::element::{CycloElement, RestrictedPoly};
use super::quotient::Quotient;

/// `d(X1^i X2^j)` is `X1^i X2^j` for `i < j`, `-X1^j X2^i` for `i > j` and
/// `0` on the diagonal. Idempotent, with kernel the symmetric polynomials.
pub fn d_operator(p: &RestrictedPoly) -> RestrictedPoly {
    let mut out = XPoly::zero(p.m());
    for (mono, c) in p.as_poly().terms() {
        if mono.i < mono.j {
            out.add_term(*mono, c.clone());
        } else if mono.i > mono.j {
            out.add_term(mono.swapped(), -c);
        }
    }
    RestrictedPoly::new_unchecked(out)
}

/// `m_ij = X1^i X2^j + X1^j X2^i` for `i < j`, and `m_ii = X1^i X2^i`.
pub fn monomial_symmetric(m: usize, i: i64, j: i64) -> Result<RestrictedPoly> {
    check_rank(m)?;
    if !(0 <= i && i <= j && j < m as i64) {
        return Err(Error::InvalidArgument(format!(
            "m_{{{i},{j}}} needs 0 <= i <= j <= {}",
            m - 1
        )));
    }
    let mut p = XPoly::monomial(m, i, j);
    if i != j {
        p = &p + &XPoly::monomial(m, j, i);
    }
    Ok(RestrictedPoly::new_unchecked(p))
}

/// Coordinates of a symmetric restricted polynomial in the basis `{m_ij}`,
/// listed for `i ≤ j` in `(i, j)` order; absent pairs have zero coordinate.
pub fn symmetric_coordinates(p: &RestrictedPoly) -> Result<Vec<((i64, i64), CoeffPoly)>> {
    if !p.is_symmetric() {
        return Err(Error::Domain(format!("{p} is not symmetric")));
    }
    Ok(p.as_poly()
        .terms()
        .filter(|(mono, _)| mono.i <= mono.j)
        .map(|(mono, c)| ((mono.i, mono.j), c.clone()))
        .collect())
}

impl Quotient {
    /// `φ(g) = d(X1 g)` for symmetric restricted `g`.
    pub fn phi_map(&self, g: &RestrictedPoly) -> Result<RestrictedPoly> {
        if !g.is_symmetric() {
            return Err(Error::Domain(format!("φ needs a symmetric input, got {g}")));
        }
        let product = self.reduce_poly(&g.as_poly().shift(XMonomial::new(1, 0)))?;
        if !product.g.is_zero() {
            return Err(Error::Invariant(
                "X1 g picked up a T component during reduction".into(),
            ));
        }
        Ok(d_operator(&product.f))
    }

    /// The matrix of `φ` on `span{m_ij : 0 ≤ i ≤ j < m-1}` into
    /// `span{X1^a X2^b : 0 ≤ a < b ≤ m-1}`.
    pub fn phi_matrix(&self) -> Result<PhiMatrix> {
        let m = self.m() as i64;
        // Both bases in descending (X2-exponent, X1-exponent) order; m_ij is
        // paired with the target X1^i X2^{j+1}.
        let mut domain: Vec<(i64, i64)> = (0..m - 1)
            .flat_map(|j| (0..=j).map(move |i| (i, j)))
            .collect();
        domain.sort_by_key(|&(i, j)| std::cmp::Reverse((j, i)));
        let mut codomain: Vec<(i64, i64)> =
            (1..m).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
        codomain.sort_by_key(|&(i, j)| std::cmp::Reverse((j, i)));

        let mut entries = vec![vec![CoeffPoly::zero(self.m()); domain.len()]; codomain.len()];
        for (col, &(i, j)) in domain.iter().enumerate() {
            let image = self.phi_map(&monomial_symmetric(self.m(), i, j)?)?;
            for (row, &(a, b)) in codomain.iter().enumerate() {
                entries[row][col] = image.as_poly().coeff(a, b);
            }
        }
        Ok(PhiMatrix {
            domain,
            codomain,
            entries,
        })
    }

    /// `p_k = m_{k,m-1} - φ|^{-1}(φ(m_{k,m-1}))` for `k = 0 … m-1`, spanning
    /// `M = {g ∈ R^W : X1 g ∈ R^W}`.
    pub fn centre_t_basis(&self) -> Result<Vec<RestrictedPoly>> {
        let m = self.m();
        let phi = self.phi_matrix()?;
        phi.check_triangular()?;
        let top = m as i64 - 1;
        (0..m as i64)
            .map(|k| {
                let mk = monomial_symmetric(m, k, top)?;
                let image = self.phi_map(&mk)?;
                let preimage = phi.solve(&image)?;
                mk.as_poly()
                    .try_sub(preimage.as_poly())
                    .and_then(RestrictedPoly::new)
            })
            .collect()
    }

    /// The full basis `{m_ij : i ≤ j} ∪ {p_k T}` of the centre.
    pub fn centre_basis(&self) -> Result<CentreBasis> {
        let m = self.m() as i64;
        let mut symmetric = Vec::new();
        for i in 0..m {
            for j in i..m {
                symmetric.push(((i, j), monomial_symmetric(self.m(), i, j)?));
            }
        }
        Ok(CentreBasis {
            m: self.m(),
            symmetric,
            t_part: self.centre_t_basis()?,
        })
    }
}

/// `p_0 … p_{m-1}` for a one-off rank.
pub fn centre_t_basis(m: usize) -> Result<Vec<RestrictedPoly>> {
    Quotient::new(m)?.centre_t_basis()
}

/// Matrix of `φ` restricted to `R^W_{m-1}`, rows indexed by `codomain`
/// monomials and columns by `domain` pairs `(i, j)` of `m_ij`.
#[derive(Debug, Clone)]
pub struct PhiMatrix {
    pub domain: Vec<(i64, i64)>,
    pub codomain: Vec<(i64, i64)>,
    pub entries: Vec<Vec<CoeffPoly>>,
}

impl PhiMatrix {
    /// Lower triangular with every diagonal entry equal to `-1`.
    pub fn check_triangular(&self) -> Result<()> {
        let n = self.domain.len();
        if self.codomain.len() != n {
            return Err(Error::Invariant(format!(
                "φ matrix is {}x{n}, not square",
                self.codomain.len()
            )));
        }
        for (r, row) in self.entries.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                let ok = match c.cmp(&r) {
                    std::cmp::Ordering::Greater => entry.is_zero(),
                    std::cmp::Ordering::Equal => entry.as_constant() == Some((-1).into()),
                    std::cmp::Ordering::Less => true,
                };
                if !ok {
                    return Err(Error::Invariant(format!(
                        "φ matrix entry ({r},{c}) = {entry} breaks the -1 triangular shape"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Solves `φ(x) = target` by forward substitution; the diagonal is `-1`,
    /// so no division occurs.
    pub fn solve(&self, target: &RestrictedPoly) -> Result<RestrictedPoly> {
        let m = target.m();
        for (mono, _) in target.as_poly().terms() {
            if !self.codomain.contains(&(mono.i, mono.j)) {
                return Err(Error::Invariant(format!(
                    "{mono} lies outside the image of d"
                )));
            }
        }
        let mut x: Vec<CoeffPoly> = Vec::with_capacity(self.domain.len());
        for (r, &(a, b)) in self.codomain.iter().enumerate() {
            let mut acc = target.as_poly().coeff(a, b);
            for (c, xc) in x.iter().enumerate() {
                acc = &acc - &(&self.entries[r][c] * xc);
            }
            x.push(-acc);
        }
        let mut out = XPoly::zero(m);
        for (&(i, j), c) in self.domain.iter().zip(&x) {
            out = &out + &monomial_symmetric(m, i, j)?.as_poly().scale(c);
        }
        RestrictedPoly::new(out)
    }
}

/// The constructed basis of the centre.
#[derive(Debug, Clone)]
pub struct CentreBasis {
    pub m: usize,
    /// `((i, j), m_ij)` for `0 ≤ i ≤ j ≤ m-1`.
    pub symmetric: Vec<((i64, i64), RestrictedPoly)>,
    /// `p_0 … p_{m-1}`; the centre elements are `p_k T`.
    pub t_part: Vec<RestrictedPoly>,
}

impl CentreBasis {
    pub fn rank(&self) -> usize {
        self.symmetric.len() + self.t_part.len()
    }

    /// Labelled centre elements: `m_ij` first, then `p_k T`.
    pub fn elements(&self) -> Vec<(String, CycloElement)> {
        let sym = self
            .symmetric
            .iter()
            .map(|((i, j), p)| (format!("m_{i}{j}"), CycloElement::from_poly(p.clone())));
        let tp = self
            .t_part
            .iter()
            .enumerate()
            .map(|(k, p)| (format!("p_{k} T"), CycloElement::times_t(p.clone())));
        sym.chain(tp).collect()
    }
}
