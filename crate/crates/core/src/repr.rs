//! Right modules over Lie algebras, given by one action matrix per basis element.
//!
//! The action `v·x` is `ρ(x) v` on column vectors. Applying the right Leibniz
//! identity to `[v,[x,y]]` with `v` in a module gives the axiom
//! `ρ([x,y]) = ρ(y)ρ(x) - ρ(x)ρ(y)`, which every constructor here enforces.

use num_integer::Roots;
use num_traits::Zero;

use crate::algebra::LeibnizAlgebra;
use crate::exactla::{rational_eigensplit, unit, RatMatrix, Rational, SparseSystem, Subspace};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleRep {
    lie: LeibnizAlgebra,
    labels: Vec<String>,
    action: Vec<RatMatrix>,
}

/// A basis pair `(x, y)` where `ρ([x,y]) - ρ(y)ρ(x) + ρ(x)ρ(y)` is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleViolation {
    pub x: usize,
    pub y: usize,
    pub residual: RatMatrix,
}

/// Basis of the intertwiners `f` with `f ρ_src(x) = ρ_tgt(x) f`.
#[derive(Debug, Clone)]
pub struct HomSpace<'a> {
    pub source: &'a ModuleRep,
    pub target: &'a ModuleRep,
    pub basis: Vec<RatMatrix>,
}

impl HomSpace<'_> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotypicComponent {
    pub subspace: Subspace,
    pub multiplicity: usize,
    pub irreducible_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotypicDecomposition {
    pub components: Vec<IsotypicComponent>,
}

impl ModuleRep {
    /// Builds and verifies the module axiom; fails with [`Error::Axiom`] on any violation.
    pub fn new(lie: LeibnizAlgebra, labels: Vec<String>, action: Vec<RatMatrix>) -> Result<Self> {
        let m = Self::new_unchecked(lie, labels, action)?;
        let violations = m.module_check();
        if let Some(v) = violations.first() {
            return Err(Error::Axiom(format!(
                "module axiom fails for basis pair ({}, {}) ({} violations)",
                v.x,
                v.y,
                violations.len()
            )));
        }
        Ok(m)
    }

    /// Shape checks only. Use [`ModuleRep::module_check`] to inspect the axiom.
    pub fn new_unchecked(
        lie: LeibnizAlgebra,
        labels: Vec<String>,
        action: Vec<RatMatrix>,
    ) -> Result<Self> {
        if !lie.is_lie() {
            return Err(Error::NotLie);
        }
        if action.len() != lie.dim() {
            return Err(Error::DimensionMismatch {
                expected: lie.dim(),
                found: action.len(),
            });
        }
        let n = labels.len();
        for a in &action {
            if a.rows() != n || a.cols() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: a.rows(),
                });
            }
        }
        Ok(ModuleRep {
            lie,
            labels,
            action,
        })
    }

    pub fn zero(lie: LeibnizAlgebra, mdim: usize) -> Self {
        let labels = default_labels(mdim);
        let action = vec![RatMatrix::zeros(mdim, mdim); lie.dim()];
        ModuleRep::new(lie, labels, action).expect("zero action satisfies the axiom")
    }

    /// The algebra acting on itself by right multiplication.
    pub fn adjoint(lie: &LeibnizAlgebra) -> Result<Self> {
        let n = lie.dim();
        let action = (0..n).map(|b| lie.right_mult(&unit(n, b))).collect();
        ModuleRep::new(lie.clone(), lie.labels().to_vec(), action)
    }

    pub fn lie(&self) -> &LeibnizAlgebra {
        &self.lie
    }

    pub fn mdim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.mdim() {
            return Err(Error::DimensionMismatch {
                expected: self.mdim(),
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn action(&self) -> &[RatMatrix] {
        &self.action
    }

    /// `ρ(x)` for an arbitrary element `x` of the Lie algebra.
    pub fn act(&self, x: &[Rational]) -> RatMatrix {
        let n = self.mdim();
        let mut out = RatMatrix::zeros(n, n);
        for (b, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.try_add(&self.action[b].scale(c)).expect("same shape");
            }
        }
        out
    }

    pub fn module_check(&self) -> Vec<ModuleViolation> {
        let n = self.lie.dim();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let mut lhs = RatMatrix::zeros(self.mdim(), self.mdim());
                for (k, c) in self.lie.product(x, y) {
                    lhs = lhs.try_add(&self.action[*k].scale(c)).expect("shape");
                }
                let yx = self.action[y].try_mul(&self.action[x]).expect("shape");
                let xy = self.action[x].try_mul(&self.action[y]).expect("shape");
                let residual = lhs
                    .try_sub(&yx.try_sub(&xy).expect("shape"))
                    .expect("shape");
                if !residual.is_zero() {
                    out.push(ModuleViolation { x, y, residual });
                }
            }
        }
        out
    }

    /// Direct sum; the second summand's coordinates follow the first's.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.lie != other.lie {
            return Err(Error::AlgebraMismatch);
        }
        let (a, b) = (self.mdim(), other.mdim());
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(x, y)| RatMatrix::block2(x, &RatMatrix::zeros(a, b), &RatMatrix::zeros(b, a), y))
            .collect();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| format!("{l}'")));
        ModuleRep::new(self.lie.clone(), labels, action)
    }

    /// `m` copies of this module.
    pub fn multiple(&self, m: usize) -> Result<Self> {
        let mut acc = ModuleRep::zero(self.lie.clone(), 0);
        for _ in 0..m {
            acc = acc.direct_sum(self)?;
        }
        Ok(acc.with_labels(default_labels(self.mdim() * m))?)
    }

    /// The submodule on an invariant subspace, in the subspace's RREF basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<Self> {
        if sub.ambient_dim() != self.mdim() {
            return Err(Error::DimensionMismatch {
                expected: self.mdim(),
                found: sub.ambient_dim(),
            });
        }
        let basis = sub.basis_vectors();
        let d = basis.len();
        let mut action = Vec::with_capacity(self.action.len());
        for rho in &self.action {
            let mut m = RatMatrix::zeros(d, d);
            for (q, v) in basis.iter().enumerate() {
                let image = rho.mul_vec(v)?;
                let coords = sub
                    .coordinates(&image)
                    .map_err(|_| Error::NotInvariant("subspace is not a submodule".into()))?;
                for (p, c) in coords.into_iter().enumerate() {
                    m[(p, q)] = c;
                }
            }
            action.push(m);
        }
        ModuleRep::new(self.lie.clone(), default_labels(d), action)
    }

    /// Span of `v·x` over all `v` in the module and `x` in the algebra.
    pub fn action_image(&self) -> Subspace {
        let mut vs = Vec::new();
        for rho in &self.action {
            for j in 0..rho.cols() {
                let c = rho.column(j);
                if c.iter().any(|x| !x.is_zero()) {
                    vs.push(c);
                }
            }
        }
        Subspace::from_spanning(self.mdim(), &vs)
    }
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Canonical basis of `hom_S(M, N)`.
pub fn hom_space<'a>(m: &'a ModuleRep, n: &'a ModuleRep) -> Result<HomSpace<'a>> {
    if m.lie != n.lie {
        return Err(Error::AlgebraMismatch);
    }
    let (s, t) = (m.mdim(), n.mdim());
    let unknowns = t * s;
    let mut sys = SparseSystem::new(unknowns);
    let idx = |r: usize, c: usize| r * s + c;
    for (rm, rn) in m.action.iter().zip(&n.action) {
        for r in 0..t {
            for c in 0..s {
                let mut terms = Vec::new();
                for k in 0..s {
                    let a = &rm[(k, c)];
                    if !a.is_zero() {
                        terms.push((idx(r, k), a.clone()));
                    }
                }
                for k in 0..t {
                    let a = &rn[(r, k)];
                    if !a.is_zero() {
                        terms.push((idx(k, c), -a.clone()));
                    }
                }
                sys.add_equation(&terms);
            }
        }
    }
    let basis = sys
        .kernel()
        .basis_vectors()
        .into_iter()
        .map(|v| RatMatrix::from_vec(t, s, v))
        .collect();
    Ok(HomSpace {
        source: m,
        target: n,
        basis,
    })
}

pub fn end_dim(m: &ModuleRep) -> Result<usize> {
    Ok(hom_space(m, m)?.dim())
}

/// Nonzero with one-dimensional endomorphism algebra. Over a semisimple algebra,
/// complete reducibility makes this equivalent to irreducibility.
pub fn is_irreducible(m: &ModuleRep) -> Result<bool> {
    Ok(m.mdim() >= 1 && end_dim(m)? == 1)
}

/// Basis (as matrices) of the center of the span of `elements`.
fn center_of_span(elements: &[RatMatrix]) -> Result<Vec<RatMatrix>> {
    let d = elements.len();
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut sys = SparseSystem::new(d);
    for ek in elements {
        let comms: Vec<RatMatrix> = elements
            .iter()
            .map(|el| el.try_mul(ek)?.try_sub(&ek.try_mul(el)?))
            .collect::<Result<_>>()?;
        let entries = comms[0].entries().len();
        for e in 0..entries {
            let terms: Vec<(usize, Rational)> = comms
                .iter()
                .enumerate()
                .map(|(l, c)| (l, c.entries()[e].clone()))
                .collect();
            sys.add_equation(&terms);
        }
    }
    let ker = sys.kernel();
    ker.basis_vectors()
        .iter()
        .map(|coef| {
            let mut z = RatMatrix::zeros(elements[0].rows(), elements[0].cols());
            for (l, c) in coef.iter().enumerate() {
                if !c.is_zero() {
                    z = z.try_add(&elements[l].scale(c))?;
                }
            }
            Ok(z)
        })
        .collect()
}

const SPLIT_ATTEMPTS: usize = 5;

/// Weight of the `k`-th (1-based) central basis element on attempt `t`.
fn generic_weight(k: usize, t: usize) -> Rational {
    let k = k as i64;
    crate::exactla::int(k + (t as i64) * k * k)
}

/// Splits the module into isotypic components using the eigenspaces of a
/// deterministic generic element of the center of its endomorphism algebra.
pub fn isotypic_split(m: &ModuleRep) -> Result<IsotypicDecomposition> {
    let n = m.mdim();
    if n == 0 {
        return Ok(IsotypicDecomposition {
            components: Vec::new(),
        });
    }
    let end = hom_space(m, m)?;
    let center = center_of_span(&end.basis)?;
    let mut last_err = String::from("no attempt made");
    for t in 0..SPLIT_ATTEMPTS {
        let mut z = RatMatrix::zeros(n, n);
        for (k, zk) in center.iter().enumerate() {
            z = z.try_add(&zk.scale(&generic_weight(k + 1, t)))?;
        }
        let spaces = match rational_eigensplit(&z) {
            Ok(s) => s,
            Err(e) => {
                last_err = e.to_string();
                continue;
            }
        };
        if spaces.len() != center.len() {
            last_err = format!(
                "generic central element has {} eigenvalues for a {}-dimensional center",
                spaces.len(),
                center.len()
            );
            continue;
        }
        let mut components = Vec::with_capacity(spaces.len());
        for es in spaces {
            let sub = m.restrict(&es.space)?;
            let e = end_dim(&sub)?;
            let mult = e.sqrt();
            if mult * mult != e || mult == 0 || es.space.dim() % mult != 0 {
                return Err(Error::Inconsistent(format!(
                    "component of dimension {} has endomorphism dimension {e}",
                    es.space.dim()
                )));
            }
            components.push(IsotypicComponent {
                irreducible_dim: es.space.dim() / mult,
                multiplicity: mult,
                subspace: es.space,
            });
        }
        components.sort_by_key(|c| c.subspace.leading_pivot());
        return Ok(IsotypicDecomposition { components });
    }
    Err(Error::NotSplitOverQ(last_err))
}

/// Tensor product of a `G1`-module and a `G2`-module as a module over `G1 ⊕ G2`.
///
/// Coordinate `(a, b)` of the product sits at index `a * dim(M2) + b`.
pub fn tensor_module(m1: &ModuleRep, m2: &ModuleRep) -> Result<ModuleRep> {
    let lie = m1.lie.direct_sum(&m2.lie);
    let (d1, d2) = (m1.mdim(), m2.mdim());
    let mut action = Vec::with_capacity(lie.dim());
    for r in &m1.action {
        action.push(r.kron(&RatMatrix::identity(d2)));
    }
    for r in &m2.action {
        action.push(RatMatrix::identity(d1).kron(r));
    }
    let labels = m1
        .labels
        .iter()
        .flat_map(|a| m2.labels.iter().map(move |b| format!("{a}*{b}")))
        .collect();
    ModuleRep::new(lie, labels, action)
}

/// Whether `sigma` (columns are images of basis vectors) is a Lie algebra automorphism.
pub fn is_lie_automorphism(lie: &LeibnizAlgebra, sigma: &RatMatrix) -> bool {
    sigma.rows() == lie.dim() && sigma.is_invertible() && lie.preserves_bracket(sigma)
}

/// The module with action `v·x = v σ(x)`.
pub fn twist_module(m: &ModuleRep, sigma: &RatMatrix) -> Result<ModuleRep> {
    if !is_lie_automorphism(&m.lie, sigma) {
        return Err(Error::NotAutomorphism(
            "twist map is not an automorphism of the acting algebra".into(),
        ));
    }
    let action = (0..m.lie.dim()).map(|b| m.act(&sigma.column(b))).collect();
    ModuleRep::new(m.lie.clone(), m.labels.clone(), action)
}

/// `dim hom(M,N) = end_dim(M) = end_dim(N)`; for completely reducible modules
/// this forces equal isotypic multiplicities.
pub fn modules_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<bool> {
    if m.mdim() != n.mdim() {
        return Ok(false);
    }
    let h = hom_space(m, n)?.dim();
    Ok(h == end_dim(m)? && h == end_dim(n)?)
}

/// `I` as a module over the subalgebra spanned by `s_basis`, via right multiplication,
/// both expressed in the given bases.
pub fn module_from_bases(
    l: &LeibnizAlgebra,
    s_basis: &[Vec<Rational>],
    s_labels: Vec<String>,
    i_basis: &[Vec<Rational>],
) -> Result<ModuleRep> {
    let s_alg = l.subalgebra(s_basis, s_labels)?;
    if !s_alg.is_lie() {
        return Err(Error::NotLie);
    }
    let i_cols = RatMatrix::from_columns(l.dim(), i_basis);
    let d = i_basis.len();
    let mut action = Vec::with_capacity(s_basis.len());
    for s in s_basis {
        let mut m = RatMatrix::zeros(d, d);
        for (q, u) in i_basis.iter().enumerate() {
            let image = l.bracket(u, s);
            let coords = crate::exactla::solve(&i_cols, &image)
                .map_err(|_| Error::NotInvariant("[I, S] is not contained in I".into()))?;
            for (p, c) in coords.into_iter().enumerate() {
                m[(p, q)] = c;
            }
        }
        action.push(m);
    }
    let labels = default_labels(d);
    ModuleRep::new(s_alg, labels, action)
}

/// `I` as a module over the subalgebra `S` through right multiplication, in the RREF bases.
pub fn module_from_ideal(l: &LeibnizAlgebra, s: &Subspace, i: &Subspace) -> Result<ModuleRep> {
    let s_labels = (0..s.dim()).map(|k| format!("s{k}")).collect();
    module_from_bases(l, &s.basis_vectors(), s_labels, &i.basis_vectors())
}
