//! Levi lifting, simple ideals of the Levi factor, the adjacency graph between
//! simple ideals and isotypic components of `I`, and the resulting decomposition
//! into indecomposable summands.

use num_traits::Zero;
use petgraph::unionfind::UnionFind;

use crate::algebra::{IdealSubspace, LeibnizAlgebra, Liezation};
use crate::exactla::{unit, RatMatrix, Rational, SparseSystem, Subspace};
use crate::repr::{isotypic_split, module_from_bases, ModuleRep};
use crate::{Error, Result};

/// `L = S ∔ I` with `S` a Lie subalgebra lifted from the liezation.
#[derive(Debug, Clone)]
pub struct LeviDecomposition {
    pub s: Subspace,
    pub i: IdealSubspace,
    /// `dim L × dim G` matrix of the linear section `G → L` (standard basis vectors).
    pub section: RatMatrix,
    /// Basis of `S`; vector `a` lifts basis vector `a` of the liezation.
    pub s_basis: Vec<Vec<Rational>>,
    /// RREF basis of `I`.
    pub i_basis: Vec<Vec<Rational>>,
    /// `S` in the basis `s_basis`, labelled like the liezation.
    pub s_algebra: LeibnizAlgebra,
    pub liezation: Liezation,
    /// Columns `s_basis` followed by `i_basis`.
    pub change: RatMatrix,
    pub change_inv: RatMatrix,
}

impl LeviDecomposition {
    pub fn s_dim(&self) -> usize {
        self.s_basis.len()
    }

    pub fn i_dim(&self) -> usize {
        self.i_basis.len()
    }

    /// `B⁻¹ M B`: the map `m` in Levi coordinates (`S` first, then `I`).
    pub fn to_levi(&self, m: &RatMatrix) -> Result<RatMatrix> {
        self.change_inv.try_mul(m)?.try_mul(&self.change)
    }

    /// Inverse of [`LeviDecomposition::to_levi`].
    pub fn from_levi(&self, m: &RatMatrix) -> Result<RatMatrix> {
        self.change.try_mul(m)?.try_mul(&self.change_inv)
    }

    /// `I` as a right `S`-module.
    pub fn i_module(&self, l: &LeibnizAlgebra) -> Result<ModuleRep> {
        module_from_bases(
            l,
            &self.s_basis,
            self.s_algebra.labels().to_vec(),
            &self.i_basis,
        )
    }

    /// `S` acting on itself by right multiplication.
    pub fn s_module(&self) -> Result<ModuleRep> {
        ModuleRep::adjoint(&self.s_algebra)
    }

    /// Coordinates of a vector of `L` in the `S` basis, or `None` if it is not in `S`.
    pub fn s_coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let c = self.change_inv.mul_vec(v).ok()?;
        let (s, i) = c.split_at(self.s_dim());
        i.iter().all(Zero::is_zero).then(|| s.to_vec())
    }
}

/// Lifts the liezation to a Lie subalgebra complementing `I`.
///
/// The section sends liezation basis vector `a` to the standard vector `c_a` it came
/// from. The correction `τ: G → I` solves
/// `Σ_e γ_ab^e τ(g_e) − τ(g_a)·c_b = [c_a,c_b] − Σ_e γ_ab^e c_e` for all `a, b`,
/// with free variables set to zero.
pub fn levi_lift(l: &LeibnizAlgebra) -> Result<LeviDecomposition> {
    let lz = l.liezation()?;
    let g = &lz.algebra;
    if g.killing_form()?.rank() != g.dim() {
        return Err(Error::NotSemisimple);
    }
    let n = l.dim();
    let gd = g.dim();
    let i_basis = lz.ideal.space.basis_vectors();
    let d = i_basis.len();
    let cs: Vec<Vec<Rational>> = lz.complement.iter().map(|&k| unit(n, k)).collect();
    let section = RatMatrix::from_columns(n, &cs);

    // ρ(b)[p, q]: coordinate p of [u_q, c_b] in the basis of I.
    let rho: Vec<RatMatrix> = cs
        .iter()
        .map(|c| {
            let mut m = RatMatrix::zeros(d, d);
            for (q, u) in i_basis.iter().enumerate() {
                let coords = lz.ideal.space.coordinates(&l.bracket(u, c))?;
                for (p, x) in coords.into_iter().enumerate() {
                    m[(p, q)] = x;
                }
            }
            Ok(m)
        })
        .collect::<Result<_>>()?;

    // Unknown T[p, e] (coordinate p of τ(g_e)) at index p * gd + e.
    let mut sys = SparseSystem::new(d * gd);
    for a in 0..gd {
        for b in 0..gd {
            let mut defect = l.bracket(&cs[a], &cs[b]);
            for (e, gamma) in g.product(a, b) {
                for (x, y) in defect.iter_mut().zip(&cs[*e]) {
                    *x -= gamma * y;
                }
            }
            let delta = lz.ideal.space.coordinates(&defect)?;
            for (p, rhs) in delta.iter().enumerate() {
                let mut terms: Vec<(usize, Rational)> = g
                    .product(a, b)
                    .iter()
                    .map(|(e, gamma)| (p * gd + e, gamma.clone()))
                    .collect();
                for q in 0..d {
                    let r = &rho[b][(p, q)];
                    if !r.is_zero() {
                        terms.push((q * gd + a, -r.clone()));
                    }
                }
                sys.add_affine(&terms, rhs);
            }
        }
    }
    let t = sys.particular_solution().map_err(|_| Error::NoSolution)?;

    let s_basis: Vec<Vec<Rational>> = cs
        .iter()
        .enumerate()
        .map(|(a, c)| {
            let mut v = c.clone();
            for (q, u) in i_basis.iter().enumerate() {
                let coef = &t[q * gd + a];
                if !coef.is_zero() {
                    for (x, y) in v.iter_mut().zip(u) {
                        *x += coef * y;
                    }
                }
            }
            v
        })
        .collect();
    let s_algebra = l.subalgebra(&s_basis, g.labels().to_vec())?;
    let s = Subspace::from_spanning(n, &s_basis);
    let mut cols = s_basis.clone();
    cols.extend(i_basis.iter().cloned());
    let change = RatMatrix::from_columns(n, &cols);
    let change_inv = change.inverse()?;
    Ok(LeviDecomposition {
        s,
        i: lz.ideal.clone(),
        section,
        s_basis,
        i_basis,
        s_algebra,
        liezation: lz,
        change,
        change_inv,
    })
}

/// Simple ideals of a semisimple Lie algebra, as subspaces of it, ordered by
/// leading pivot. They are the isotypic components of the adjoint module.
pub fn simple_ideals(s: &LeibnizAlgebra) -> Result<Vec<Subspace>> {
    if s.dim() == 0 {
        return Ok(Vec::new());
    }
    let adj = ModuleRep::adjoint(s)?;
    let split = isotypic_split(&adj)?;
    split
        .components
        .into_iter()
        .map(|c| {
            if c.multiplicity != 1 {
                return Err(Error::Inconsistent(format!(
                    "adjoint isotypic component of dimension {} has multiplicity {}",
                    c.subspace.dim(),
                    c.multiplicity
                )));
            }
            Ok(c.subspace)
        })
        .collect()
}

/// Isotypic component of `I` as a subspace of `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub space: Subspace,
    pub multiplicity: usize,
    pub irreducible_dim: usize,
    /// No element of `S` acts on it.
    pub trivial: bool,
}

#[derive(Debug, Clone)]
pub struct StructureGraph {
    pub levi: LeviDecomposition,
    /// Simple ideals of `S`, as subspaces of `L`.
    pub nodes: Vec<Subspace>,
    pub components: Vec<Component>,
    /// `(component, node)` pairs where the node acts nontrivially on the component.
    pub edges: Vec<(usize, usize)>,
}

impl StructureGraph {
    /// Nodes sharing a component with `node`.
    pub fn adjacent(&self, node: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter(|(_, n)| *n == node)
            .flat_map(|(c, _)| {
                self.edges
                    .iter()
                    .filter(move |(c2, _)| c2 == c)
                    .map(|(_, n2)| *n2)
            })
            .filter(|&n2| n2 != node)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Union-find over nodes `0..nodes` and components `nodes..nodes+components`.
    fn connectivity(&self) -> UnionFind<usize> {
        let k = self.nodes.len();
        let mut uf = UnionFind::new(k + self.components.len());
        for &(c, n) in &self.edges {
            uf.union(k + c, n);
        }
        uf
    }

    pub fn nodes_connected(&self, a: usize, b: usize) -> bool {
        self.connectivity().equiv(a, b)
    }
}

fn lift(basis: &[Vec<Rational>], ambient: usize, coords: &Subspace) -> Subspace {
    let vs: Vec<Vec<Rational>> = coords
        .basis_vectors()
        .iter()
        .map(|c| {
            let mut v = vec![Rational::zero(); ambient];
            for (coef, b) in c.iter().zip(basis) {
                if !coef.is_zero() {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += coef * y;
                    }
                }
            }
            v
        })
        .collect();
    Subspace::from_spanning(ambient, &vs)
}

fn acts_nontrivially(l: &LeibnizAlgebra, component: &Subspace, node: &Subspace) -> bool {
    let xs = node.basis_vectors();
    component.basis_vectors().iter().any(|v| {
        xs.iter()
            .any(|x| l.bracket(v, x).iter().any(|c| !c.is_zero()))
    })
}

pub fn structure_graph(l: &LeibnizAlgebra) -> Result<StructureGraph> {
    let levi = levi_lift(l)?;
    structure_graph_with(l, levi)
}

/// Builds the graph on a given Levi decomposition.
pub fn structure_graph_with(l: &LeibnizAlgebra, levi: LeviDecomposition) -> Result<StructureGraph> {
    let n = l.dim();
    let nodes: Vec<Subspace> = simple_ideals(&levi.s_algebra)?
        .iter()
        .map(|sub| lift(&levi.s_basis, n, sub))
        .collect();
    let module = levi.i_module(l)?;
    let split = isotypic_split(&module)?;
    let mut components = Vec::with_capacity(split.components.len());
    let mut edges = Vec::new();
    for (ci, c) in split.components.iter().enumerate() {
        let space = lift(&levi.i_basis, n, &c.subspace);
        let mut trivial = true;
        for (ni, node) in nodes.iter().enumerate() {
            if acts_nontrivially(l, &space, node) {
                edges.push((ci, ni));
                trivial = false;
            }
        }
        components.push(Component {
            space,
            multiplicity: c.multiplicity,
            irreducible_dim: c.irreducible_dim,
            trivial,
        });
    }
    Ok(StructureGraph {
        levi,
        nodes,
        components,
        edges,
    })
}

/// One indecomposable summand `S_part ∔ I_part`.
#[derive(Debug, Clone)]
pub struct Summand {
    pub nodes: Vec<usize>,
    pub components: Vec<usize>,
    pub s_part: Subspace,
    pub i_part: Subspace,
    /// `[I_part, S] = I_part`.
    pub action_surjective: bool,
    /// All simple ideals of the summand are connected through shared components.
    pub connected: bool,
}

impl Summand {
    pub fn space(&self) -> Subspace {
        self.s_part.sum(&self.i_part).expect("same ambient")
    }
}

#[derive(Debug, Clone)]
pub struct SummandDecomposition {
    /// Ordered by leading pivot of the summand.
    pub summands: Vec<Summand>,
    /// Components of `I` on which `S` acts trivially; each is an ideal on its own.
    pub trivial_components: Vec<usize>,
    pub warnings: Vec<String>,
}

impl SummandDecomposition {
    pub fn count(&self) -> usize {
        self.summands.len()
    }
}

pub fn indecomposable_summands(l: &LeibnizAlgebra) -> Result<SummandDecomposition> {
    let graph = structure_graph(l)?;
    summands_from_graph(l, &graph)
}

/// Groups nodes and nontrivial components by graph connectivity.
pub fn summands_from_graph(
    l: &LeibnizAlgebra,
    graph: &StructureGraph,
) -> Result<SummandDecomposition> {
    let n = l.dim();
    let k = graph.nodes.len();
    let labels = graph.connectivity().into_labeling();
    let mut roots: Vec<usize> = (0..k).map(|i| labels[i]).collect();
    roots.sort_unstable();
    roots.dedup();
    let mut warnings = Vec::new();
    let trivial_components: Vec<usize> = (0..graph.components.len())
        .filter(|&c| graph.components[c].trivial)
        .collect();
    for &c in &trivial_components {
        warnings.push(format!(
            "[I,S] != I: component {c} of dimension {} has trivial action",
            graph.components[c].space.dim()
        ));
    }
    let mut summands = Vec::with_capacity(roots.len());
    for root in roots {
        let nodes: Vec<usize> = (0..k).filter(|&i| labels[i] == root).collect();
        let components: Vec<usize> = (0..graph.components.len())
            .filter(|&c| !graph.components[c].trivial && labels[k + c] == root)
            .collect();
        let mut s_part = Subspace::zero(n);
        for &i in &nodes {
            s_part = s_part.sum(&graph.nodes[i])?;
        }
        let mut i_part = Subspace::zero(n);
        for &c in &components {
            i_part = i_part.sum(&graph.components[c].space)?;
        }
        let action_surjective = l.bracket_span(&i_part, &s_part) == i_part;
        let connected = nodes_connected_within(graph, &nodes, &components);
        if !i_part.is_zero() && i_part.dim() < 2 {
            warnings.push(format!(
                "summand with a {}-dimensional I-part",
                i_part.dim()
            ));
        }
        summands.push(Summand {
            nodes,
            components,
            s_part,
            i_part,
            action_surjective,
            connected,
        });
    }
    summands.sort_by_key(|s| s.space().leading_pivot());
    Ok(SummandDecomposition {
        summands,
        trivial_components,
        warnings,
    })
}

/// Breadth-first search over the node/component bipartite graph restricted to the summand.
fn nodes_connected_within(graph: &StructureGraph, nodes: &[usize], components: &[usize]) -> bool {
    let Some(&start) = nodes.first() else {
        return true;
    };
    let mut seen = vec![start];
    let mut queue = vec![start];
    while let Some(a) = queue.pop() {
        for b in graph.adjacent(a) {
            if nodes.contains(&b) && !seen.contains(&b) {
                let shared = graph.edges.iter().any(|&(c, x)| {
                    x == a && components.contains(&c) && graph.edges.contains(&(c, b))
                });
                if shared {
                    seen.push(b);
                    queue.push(b);
                }
            }
        }
    }
    seen.len() == nodes.len()
}

/// `[I,S] = I`.
pub fn ideal_action_surjective(l: &LeibnizAlgebra, levi: &LeviDecomposition) -> bool {
    l.bracket_span(&levi.i.space, &levi.s) == levi.i.space
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{example_2_11, sl2, sl2_semidirect, sl3};

    fn check_levi(l: &LeibnizAlgebra, levi: &LeviDecomposition) {
        assert!(
            l.bracket_span(&levi.s, &levi.s).is_zero()
                || levi.s.contains(&l.bracket_span(&levi.s, &levi.s)).unwrap()
        );
        assert!(levi.s.intersect(&levi.i.space).unwrap().is_zero());
        assert_eq!(levi.s.dim() + levi.i.dim(), l.dim());
    }

    #[test]
    fn lie_input_gives_whole_algebra() {
        let g = sl2();
        let levi = levi_lift(&g).unwrap();
        assert_eq!(levi.s, Subspace::full(3));
        assert_eq!(levi.i_dim(), 0);
    }

    #[test]
    fn split_input_gives_obvious_complement() {
        let l = example_2_11();
        let levi = levi_lift(&l).unwrap();
        check_levi(&l, &levi);
        assert_eq!(levi.s, Subspace::coordinate(10, &[0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn twisted_basis_needs_correction() {
        // Replace e by e + x1 and f by f + x2 in sl2 ⋉ V(1).
        let l = sl2_semidirect(&[1]).unwrap();
        let mut b = RatMatrix::identity(5);
        b[(3, 0)] = crate::exactla::int(1);
        b[(4, 2)] = crate::exactla::int(1);
        let l2 = l.change_basis(&b).unwrap();
        let levi = levi_lift(&l2).unwrap();
        check_levi(&l2, &levi);
        assert_eq!(levi.s_dim(), 3);
    }

    #[test]
    fn non_semisimple_rejected() {
        assert!(matches!(
            levi_lift(&LeibnizAlgebra::abelian(2)),
            Err(Error::NotSemisimple)
        ));
    }

    #[test]
    fn simple_ideal_counts() {
        assert_eq!(simple_ideals(&sl2()).unwrap().len(), 1);
        let two = simple_ideals(&sl2().direct_sum(&sl2())).unwrap();
        assert_eq!(
            two,
            vec![
                Subspace::coordinate(6, &[0, 1, 2]),
                Subspace::coordinate(6, &[3, 4, 5])
            ]
        );
        assert_eq!(simple_ideals(&sl3()).unwrap().len(), 1);
    }

    #[test]
    fn graph_of_ten_dimensional_fixture() {
        let l = example_2_11();
        let g = structure_graph(&l).unwrap();
        assert_eq!(g.nodes.len(), 2);
        assert_eq!(g.components.len(), 1);
        assert_eq!(g.edges, vec![(0, 0), (0, 1)]);
        assert!(g.nodes_connected(0, 1));
        let d = summands_from_graph(&l, &g).unwrap();
        assert_eq!(d.count(), 1);
        assert!(d.summands[0].action_surjective && d.summands[0].connected);
        assert!(ideal_action_surjective(&l, &g.levi));
    }

    #[test]
    fn disconnected_direct_sum() {
        let a = sl2_semidirect(&[1]).unwrap();
        let l = a.direct_sum(&a);
        let g = structure_graph(&l).unwrap();
        assert_eq!(g.nodes.len(), 2);
        assert_eq!(g.components.len(), 2);
        assert!(!g.nodes_connected(0, 1));
        let d = indecomposable_summands(&l).unwrap();
        assert_eq!(d.count(), 2);
        assert_eq!(
            d.summands[0].space(),
            Subspace::coordinate(10, &[0, 1, 2, 3, 4])
        );
    }

    #[test]
    fn pure_lie_summands() {
        let d = indecomposable_summands(&sl2().direct_sum(&sl3())).unwrap();
        assert_eq!(d.count(), 2);
        assert!(d.summands.iter().all(|s| s.i_part.is_zero()));
    }
}
