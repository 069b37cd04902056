//! Leibniz algebras given by structure constants.
//!
//! Products follow the right convention: `[b_i, b_j] = Σ_k c_ij^k b_k`, and the
//! defining identity is `[x,[y,z]] = [[x,y],z] - [[x,z],y]`, so every right
//! multiplication `y ↦ [y,x]` is a derivation.
//!
//! Matrices of linear maps act on column coordinate vectors: column `p` holds the
//! image of `b_p`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::exactla::{unit, RatMatrix, Rational, Subspace};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// Dense constants, index `(i * dim + j) * dim + k`.
    sc: Vec<Rational>,
    /// Nonzero part of `[b_i, b_j]`, index `i * dim + j`.
    products: Vec<Vec<(usize, Rational)>>,
}

impl std::fmt::Debug for LeibnizAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "LeibnizAlgebra(dim {}) {{", self.dim)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.product(i, j);
                if p.is_empty() {
                    continue;
                }
                let terms: Vec<String> = p
                    .iter()
                    .map(|(k, c)| format!("{c}*{}", self.labels[*k]))
                    .collect();
                writeln!(
                    f,
                    "  [{},{}] = {}",
                    self.labels[i],
                    self.labels[j],
                    terms.join(" + ")
                )?;
            }
        }
        write!(f, "}}")
    }
}

/// Nonzero value of `[b_i,[b_j,b_k]] - [[b_i,b_j],b_k] + [[b_i,b_k],b_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Defect {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub defect: Vec<Rational>,
}

/// A vector of an algebra, tied to the algebra it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element<'a> {
    algebra: &'a LeibnizAlgebra,
    coeffs: Vec<Rational>,
}

impl<'a> Element<'a> {
    pub fn new(algebra: &'a LeibnizAlgebra, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != algebra.dim {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim,
                found: coeffs.len(),
            });
        }
        Ok(Element { algebra, coeffs })
    }

    pub fn basis(algebra: &'a LeibnizAlgebra, i: usize) -> Self {
        Element {
            algebra,
            coeffs: unit(algebra.dim, i),
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn bracket(&self, other: &Element<'_>) -> Result<Element<'a>> {
        if !std::ptr::eq(self.algebra, other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Element {
            algebra: self.algebra,
            coeffs: self.algebra.bracket(&self.coeffs, &other.coeffs),
        })
    }
}

/// A subspace of an algebra together with verified ideal flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSubspace {
    pub space: Subspace,
    pub is_left_ideal: bool,
    pub is_right_ideal: bool,
    pub is_two_sided: bool,
}

impl IdealSubspace {
    pub fn verify(algebra: &LeibnizAlgebra, space: Subspace) -> Self {
        let all = Subspace::full(algebra.dim());
        let left = algebra.bracket_span(&all, &space);
        let right = algebra.bracket_span(&space, &all);
        let is_left_ideal = space.contains(&left).unwrap_or(false);
        let is_right_ideal = space.contains(&right).unwrap_or(false);
        IdealSubspace {
            space,
            is_left_ideal,
            is_right_ideal,
            is_two_sided: is_left_ideal && is_right_ideal,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Quotient of an algebra by its squares ideal.
#[derive(Debug, Clone)]
pub struct Liezation {
    /// The Lie algebra `L/I` in the basis of the images of `complement`.
    pub algebra: LeibnizAlgebra,
    /// `dim G × dim L` matrix of the quotient map.
    pub projection: RatMatrix,
    /// Standard basis indices of `L` whose images form the basis of `L/I`.
    pub complement: Vec<usize>,
    pub ideal: IdealSubspace,
}

impl LeibnizAlgebra {
    /// Builds from labels and dense constants (index `(i*dim+j)*dim+k`).
    ///
    /// Checks shape and label uniqueness only; the Leibniz identity is checked separately.
    pub fn new(labels: Vec<String>, sc: Vec<Rational>) -> Result<Self> {
        let dim = labels.len();
        if sc.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: sc.len(),
            });
        }
        let unique: BTreeSet<&String> = labels.iter().collect();
        if unique.len() != dim {
            return Err(Error::Format("basis labels must be unique".into()));
        }
        let mut products = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let c = &sc[(i * dim + j) * dim + k];
                    if !c.is_zero() {
                        products[i * dim + j].push((k, c.clone()));
                    }
                }
            }
        }
        Ok(LeibnizAlgebra {
            dim,
            labels,
            sc,
            products,
        })
    }

    /// Builds from sparse `(i, j, k, c)` entries; later duplicates overwrite earlier ones.
    pub fn from_brackets(
        labels: Vec<String>,
        entries: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let dim = labels.len();
        let mut sc = vec![Rational::zero(); dim * dim * dim];
        for (i, j, k, c) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Format(format!(
                    "index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            sc[(i * dim + j) * dim + k] = c.clone();
        }
        Self::new(labels, sc)
    }

    pub fn abelian(dim: usize) -> Self {
        let labels = (0..dim).map(|i| format!("a{i}")).collect();
        Self::new(labels, vec![Rational::zero(); dim * dim * dim]).expect("abelian shape")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self = Self::new(labels, self.sc)?;
        Ok(self)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero coordinates of `[b_i, b_j]`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim + j]
    }

    /// All nonzero constants in `(i, j, k)` lexicographic order.
    pub fn nonzero_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        (0..self.dim * self.dim).flat_map(move |ij| {
            let (i, j) = (ij / self.dim, ij % self.dim);
            self.products[ij].iter().map(move |(k, c)| (i, j, *k, c))
        })
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let p = self.product(i, j);
                if p.is_empty() {
                    continue;
                }
                let f = xi * yj;
                for (k, c) in p {
                    out[*k] += &f * c;
                }
            }
        }
        out
    }

    fn bracket_basis_vec(&self, i: usize, y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, c) in self.product(i, j) {
                out[*k] += yj * c;
            }
        }
        out
    }

    fn bracket_vec_basis(&self, x: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, c) in self.product(i, j) {
                out[*k] += xi * c;
            }
        }
        out
    }

    fn basis_product_vec(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        for (k, c) in self.product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// All basis triples at which the Leibniz identity fails.
    pub fn leibniz_defects(&self) -> Vec<Defect> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product_vec(i, j);
                for k in 0..n {
                    let jk = self.basis_product_vec(j, k);
                    let ik = self.basis_product_vec(i, k);
                    let mut d = self.bracket_basis_vec(i, &jk);
                    let t2 = self.bracket_vec_basis(&ij, k);
                    let t3 = self.bracket_vec_basis(&ik, j);
                    for ((a, b), c) in d.iter_mut().zip(t2).zip(t3) {
                        *a -= b;
                        *a += c;
                    }
                    if d.iter().any(|x| !x.is_zero()) {
                        out.push(Defect { i, j, k, defect: d });
                    }
                }
            }
        }
        out
    }

    pub fn is_leibniz(&self) -> bool {
        self.leibniz_defects().is_empty()
    }

    /// Antisymmetry of the constants: `c_ij^k = -c_ji^k`.
    pub fn is_lie(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (i..n).all(|j| {
                (0..n).all(|k| {
                    let a = self.structure_constant(i, j, k);
                    let b = self.structure_constant(j, i, k);
                    (a + b).is_zero()
                })
            })
        })
    }

    /// Matrix of `y ↦ [y, x]`.
    pub fn right_mult(&self, x: &[Rational]) -> RatMatrix {
        let n = self.dim;
        let mut m = RatMatrix::zeros(n, n);
        for p in 0..n {
            let col = self.bracket_basis_vec(p, x);
            for (k, v) in col.into_iter().enumerate() {
                m[(k, p)] = v;
            }
        }
        m
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn left_mult(&self, x: &[Rational]) -> RatMatrix {
        let n = self.dim;
        let mut m = RatMatrix::zeros(n, n);
        for p in 0..n {
            let col = self.bracket_vec_basis(x, p);
            for (k, v) in col.into_iter().enumerate() {
                m[(k, p)] = v;
            }
        }
        m
    }

    /// Span of all `[a, b]` with `a ∈ A`, `b ∈ B`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis_vectors() {
            for y in b.basis_vectors() {
                let v = self.bracket(&x, &y);
                if v.iter().any(|c| !c.is_zero()) {
                    vs.push(v);
                }
            }
        }
        Subspace::from_spanning(self.dim, &vs)
    }

    /// Span of `[b_i,b_i]` and `[b_i,b_j] + [b_j,b_i]`, verified to be a two-sided
    /// ideal annihilated from the left by the whole algebra.
    pub fn squares_ideal(&self) -> Result<IdealSubspace> {
        let n = self.dim;
        let mut vs = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut v = self.basis_product_vec(i, j);
                if i != j {
                    for (a, b) in v.iter_mut().zip(self.basis_product_vec(j, i)) {
                        *a += b;
                    }
                }
                if v.iter().any(|c| !c.is_zero()) {
                    vs.push(v);
                }
            }
        }
        let space = Subspace::from_spanning(n, &vs);
        let ideal = IdealSubspace::verify(self, space);
        if !ideal.is_two_sided {
            return Err(Error::IdealViolation(
                "span of squares is not a two-sided ideal".into(),
            ));
        }
        if !self
            .bracket_span(&Subspace::full(n), &ideal.space)
            .is_zero()
        {
            return Err(Error::IdealViolation("[L, I] is nonzero".into()));
        }
        Ok(ideal)
    }

    /// Quotient by the squares ideal, in the basis of the lexicographically first
    /// standard vectors completing the ideal.
    pub fn liezation(&self) -> Result<Liezation> {
        let ideal = self.squares_ideal()?;
        let complement = ideal.space.standard_complement();
        let n = self.dim;
        let r = complement.len();
        let mut columns: Vec<Vec<Rational>> = complement.iter().map(|&k| unit(n, k)).collect();
        columns.extend(ideal.space.basis_vectors());
        let change = RatMatrix::from_columns(n, &columns);
        let inv = change.inverse()?;
        let top: Vec<usize> = (0..r).collect();
        let all: Vec<usize> = (0..n).collect();
        let projection = inv.select(&top, &all);
        let mut sc = vec![Rational::zero(); r * r * r];
        for (a, &ka) in complement.iter().enumerate() {
            for (b, &kb) in complement.iter().enumerate() {
                let v = self.basis_product_vec(ka, kb);
                let coords = projection.mul_vec(&v)?;
                for (c, x) in coords.into_iter().enumerate() {
                    sc[(a * r + b) * r + c] = x;
                }
            }
        }
        let labels = complement.iter().map(|&k| self.labels[k].clone()).collect();
        let algebra = LeibnizAlgebra::new(labels, sc)?;
        debug_assert!(algebra.is_lie());
        Ok(Liezation {
            algebra,
            projection,
            complement,
            ideal,
        })
    }

    /// `κ(b_i, b_j) = trace(ad b_i ∘ ad b_j)`; Lie algebras only.
    pub fn killing_form(&self) -> Result<RatMatrix> {
        if !self.is_lie() {
            return Err(Error::NotLie);
        }
        let n = self.dim;
        let ads: Vec<RatMatrix> = (0..n).map(|i| self.left_mult(&unit(n, i))).collect();
        let mut k = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].try_mul(&ads[j])?.trace();
                k[(i, j)] = t.clone();
                k[(j, i)] = t;
            }
        }
        Ok(k)
    }

    /// Whether the liezation has a nondegenerate Killing form.
    pub fn is_semisimple_liezation(&self) -> Result<bool> {
        let g = self.liezation()?.algebra;
        let k = g.killing_form()?;
        Ok(k.rank() == g.dim())
    }

    /// Block-diagonal direct sum. Labels of `other` get a `'` suffix while they collide.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 + n2;
        let mut labels = self.labels.clone();
        let mut taken: BTreeSet<String> = labels.iter().cloned().collect();
        for l in &other.labels {
            let mut l = l.clone();
            while taken.contains(&l) {
                l.push('\'');
            }
            taken.insert(l.clone());
            labels.push(l);
        }
        let mut sc = vec![Rational::zero(); n * n * n];
        for (i, j, k, c) in self.nonzero_constants() {
            sc[(i * n + j) * n + k] = c.clone();
        }
        for (i, j, k, c) in other.nonzero_constants() {
            sc[((i + n1) * n + j + n1) * n + k + n1] = c.clone();
        }
        Self::new(labels, sc).expect("direct sum shape")
    }

    /// `{x : [x, L] = [L, x] = 0}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut sys = crate::exactla::SparseSystem::new(n);
        // Equations: for each j, k: Σ_p x_p c_pj^k = 0 and Σ_p x_p c_jp^k = 0.
        for j in 0..n {
            for k in 0..n {
                let l: Vec<(usize, Rational)> = (0..n)
                    .map(|p| (p, self.structure_constant(p, j, k).clone()))
                    .collect();
                let r: Vec<(usize, Rational)> = (0..n)
                    .map(|p| (p, self.structure_constant(j, p, k).clone()))
                    .collect();
                sys.add_equation(&l);
                sys.add_equation(&r);
            }
        }
        sys.kernel()
    }

    /// Span of all products.
    pub fn derived(&self) -> Subspace {
        let all = Subspace::full(self.dim);
        self.bracket_span(&all, &all)
    }

    /// The algebra restricted to a subspace spanned by the given independent vectors,
    /// expressed in that basis. Fails if the span is not closed under the bracket.
    pub fn subalgebra(&self, basis: &[Vec<Rational>], labels: Vec<String>) -> Result<Self> {
        let r = basis.len();
        let cols = RatMatrix::from_columns(self.dim, basis);
        if cols.rank() != r {
            return Err(Error::Inconsistent("subalgebra basis is dependent".into()));
        }
        let mut sc = vec![Rational::zero(); r * r * r];
        for a in 0..r {
            for b in 0..r {
                let v = self.bracket(&basis[a], &basis[b]);
                let coords = crate::exactla::solve(&cols, &v).map_err(|_| {
                    Error::NotInvariant("subspace is not closed under the bracket".into())
                })?;
                for (c, x) in coords.into_iter().enumerate() {
                    sc[(a * r + b) * r + c] = x;
                }
            }
        }
        Self::new(labels, sc)
    }

    /// The same algebra in the basis given by the columns of `change`
    /// (new basis vector `j` is column `j`).
    pub fn change_basis(&self, change: &RatMatrix) -> Result<Self> {
        if change.rows() != self.dim || !change.is_invertible() {
            return Err(Error::Singular);
        }
        let basis: Vec<Vec<Rational>> = (0..self.dim).map(|j| change.column(j)).collect();
        self.subalgebra(&basis, self.labels.clone())
    }

    /// Whether `m` preserves the bracket on all basis pairs (no invertibility check).
    pub fn preserves_bracket(&self, m: &RatMatrix) -> bool {
        let n = self.dim;
        if m.rows() != n || m.cols() != n {
            return false;
        }
        let images: Vec<Vec<Rational>> = (0..n).map(|j| m.column(j)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = m.mul_vec(&self.basis_product_vec(i, j)).expect("square");
                let rhs = self.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    fn sl2() -> LeibnizAlgebra {
        // basis (e, h, f)
        let e = |i, j, k, c| (i, j, k, int(c));
        LeibnizAlgebra::from_brackets(
            vec!["e".into(), "h".into(), "f".into()],
            &[
                e(0, 1, 0, 2),
                e(1, 0, 0, -2),
                e(1, 2, 2, 2),
                e(2, 1, 2, -2),
                e(0, 2, 1, 1),
                e(2, 0, 1, -1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_square_constant_defect() {
        // [b0,b0] = b0: [b0,[b0,b0]] - [[b0,b0],b0] + [[b0,b0],b0] = b0 - b0 + b0.
        let a = LeibnizAlgebra::from_brackets(vec!["b0".into()], &[(0, 0, 0, int(1))]).unwrap();
        let d = a.leibniz_defects();
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].i, d[0].j, d[0].k), (0, 0, 0));
        assert_eq!(d[0].defect, vec![int(1)]);
    }

    #[test]
    fn abelian_is_lie_and_leibniz() {
        let a = LeibnizAlgebra::abelian(3);
        assert!(a.leibniz_defects().is_empty());
        assert!(a.is_lie());
        assert_eq!(a.squares_ideal().unwrap().dim(), 0);
        assert!(a.killing_form().unwrap().is_zero());
        assert!(!a.is_semisimple_liezation().unwrap());
    }

    #[test]
    fn sl2_basics() {
        let g = sl2();
        assert!(g.is_leibniz());
        assert!(g.is_lie());
        assert_eq!(g.center().dim(), 0);
        assert_eq!(g.derived().dim(), 3);
        let x = Element::basis(&g, 0);
        assert!(x.bracket(&x).unwrap().coeffs().iter().all(Zero::is_zero));
        let f = Element::basis(&g, 2);
        assert_eq!(x.bracket(&f).unwrap().coeffs(), &unit(3, 1)[..]);
    }

    #[test]
    fn element_algebra_mismatch() {
        let g = sl2();
        let h = sl2();
        let a = Element::basis(&g, 0);
        let b = Element::basis(&h, 0);
        assert!(matches!(a.bracket(&b), Err(Error::AlgebraMismatch)));
        assert!(Element::new(&g, vec![int(1)]).is_err());
    }

    #[test]
    fn killing_form_of_non_lie_is_rejected() {
        let a = LeibnizAlgebra::from_brackets(vec!["b0".into()], &[(0, 0, 0, int(1))]).unwrap();
        assert!(matches!(a.killing_form(), Err(Error::NotLie)));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let r = LeibnizAlgebra::new(vec!["a".into(), "a".into()], vec![Rational::zero(); 8]);
        assert!(r.is_err());
    }

    #[test]
    fn direct_sum_is_block_diagonal() {
        let s = sl2().direct_sum(&sl2());
        assert_eq!(s.dim(), 6);
        assert!(s.is_leibniz());
        assert_eq!(s.labels()[3], "e'");
        assert_eq!(s.structure_constant(3, 4, 3), &int(2));
        assert!(s.structure_constant(0, 3, 0).is_zero());
    }
}
