//! Concrete algebras and modules. Every builder checks its own axioms before returning.
//!
//! Conventions for `sl2`: basis `(e, h, f)` with `[e,h] = 2e`, `[h,f] = 2f`,
//! `[e,f] = h` and antisymmetry.
//!
//! The irreducible `(m+1)`-dimensional module `V(m)` has basis `v_0..v_m` and right action
//! `[v_i,h] = (m-2i) v_i`, `[v_i,f] = v_{i+1}`, `[v_i,e] = -i(m-i+1) v_{i-1}`.
//! For `m = 1` this is exactly the action of `sl2^1` on `span{x_1, x_2}` in the
//! ten-dimensional example algebra. The variant with `[v_i,e] = i v_{i+1}` and
//! `[v_i,f] = (m-i) v_{i-1}` is kept as [`sl2_module_as_printed`]; it does not satisfy
//! the module axiom (the `(e, h)` pair fails by a sign).

use num_traits::Zero;

use crate::algebra::LeibnizAlgebra;
use crate::exactla::{int, RatMatrix, Rational};
use crate::repr::{tensor_module, ModuleRep};
use crate::{Error, Result};

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn sl2() -> LeibnizAlgebra {
    let c = |i, j, k, v| (i, j, k, int(v));
    let g = LeibnizAlgebra::from_brackets(
        labels(&["e", "h", "f"]),
        &[
            c(0, 1, 0, 2),
            c(1, 0, 0, -2),
            c(1, 2, 2, 2),
            c(2, 1, 2, -2),
            c(0, 2, 1, 1),
            c(2, 0, 1, -1),
        ],
    )
    .expect("sl2 shape");
    debug_assert!(g.is_lie() && g.is_leibniz());
    g
}

/// Irreducible `(m+1)`-dimensional `sl2`-module.
pub fn sl2_module(m: usize) -> ModuleRep {
    let n = m + 1;
    let mi = m as i64;
    let mut e = RatMatrix::zeros(n, n);
    let mut h = RatMatrix::zeros(n, n);
    let mut f = RatMatrix::zeros(n, n);
    for i in 0..n {
        let ii = i as i64;
        h[(i, i)] = int(mi - 2 * ii);
        if i < m {
            f[(i + 1, i)] = int(1);
        }
        if i > 0 {
            e[(i - 1, i)] = int(-ii * (mi - ii + 1));
        }
    }
    ModuleRep::new(
        sl2(),
        (0..n).map(|i| format!("v{i}")).collect(),
        vec![e, h, f],
    )
    .expect("V(m) satisfies the module axiom")
}

/// The alternative constant family `[v_i,e] = i v_{i+1}`, `[v_i,f] = (m-i) v_{i-1}`,
/// returned without verification. Its module check is nonempty.
pub fn sl2_module_as_printed(m: usize) -> ModuleRep {
    let n = m + 1;
    let mi = m as i64;
    let mut e = RatMatrix::zeros(n, n);
    let mut h = RatMatrix::zeros(n, n);
    let mut f = RatMatrix::zeros(n, n);
    for i in 0..n {
        let ii = i as i64;
        h[(i, i)] = int(mi - 2 * ii);
        if i < m {
            e[(i + 1, i)] = int(ii);
        }
        if i > 0 {
            f[(i - 1, i)] = int(mi - ii);
        }
    }
    ModuleRep::new_unchecked(
        sl2(),
        (0..n).map(|i| format!("v{i}")).collect(),
        vec![e, h, f],
    )
    .expect("shape")
}

/// `G ⋉ V` with `[(g1,v1),(g2,v2)] = ([g1,g2], v1·g2)`.
pub fn semidirect(s: &LeibnizAlgebra, m: &ModuleRep) -> Result<LeibnizAlgebra> {
    let l = semidirect_unchecked(s, m)?;
    let defects = l.leibniz_defects();
    if !defects.is_empty() {
        return Err(Error::Axiom(format!(
            "semidirect product has {} Leibniz defects",
            defects.len()
        )));
    }
    Ok(l)
}

fn semidirect_unchecked(s: &LeibnizAlgebra, m: &ModuleRep) -> Result<LeibnizAlgebra> {
    if m.lie() != s {
        return Err(Error::AlgebraMismatch);
    }
    let (ds, dm) = (s.dim(), m.mdim());
    let n = ds + dm;
    let mut sc = vec![Rational::zero(); n * n * n];
    for (i, j, k, c) in s.nonzero_constants() {
        sc[(i * n + j) * n + k] = c.clone();
    }
    for (b, rho) in m.action().iter().enumerate() {
        for p in 0..dm {
            for q in 0..dm {
                let c = &rho[(q, p)];
                if !c.is_zero() {
                    sc[((ds + p) * n + b) * n + ds + q] = c.clone();
                }
            }
        }
    }
    let mut names = s.labels().to_vec();
    names.extend(m.labels().iter().cloned());
    LeibnizAlgebra::new(names, sc)
}

/// The ten-dimensional algebra `(sl2 ⊕ sl2) ⋉ I` with `I` the four-dimensional
/// irreducible module, written out constant by constant.
pub fn example_2_11() -> LeibnizAlgebra {
    let (e1, h1, f1, e2, h2, f2, x1, x2, x3, x4) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9);
    let c = |i, j, k, v| (i, j, k, int(v));
    let mut entries = Vec::new();
    for (e, h, f) in [(e1, h1, f1), (e2, h2, f2)] {
        entries.extend([
            c(e, h, e, 2),
            c(f, h, f, -2),
            c(e, f, h, 1),
            c(h, e, e, -2),
            c(h, f, f, 2),
            c(f, e, h, -1),
        ]);
    }
    entries.extend([
        c(x1, f1, x2, 1),
        c(x1, h1, x1, 1),
        c(x2, e1, x1, -1),
        c(x2, h1, x2, -1),
        c(x3, f1, x4, 1),
        c(x3, h1, x3, 1),
        c(x4, e1, x3, -1),
        c(x4, h1, x4, -1),
        c(x1, f2, x3, 1),
        c(x1, h2, x1, 1),
        c(x3, e2, x1, -1),
        c(x3, h2, x3, -1),
        c(x2, f2, x4, 1),
        c(x2, h2, x2, 1),
        c(x4, e2, x2, -1),
        c(x4, h2, x4, -1),
    ]);
    let l = LeibnizAlgebra::from_brackets(
        labels(&["e1", "h1", "f1", "e2", "h2", "f2", "x1", "x2", "x3", "x4"]),
        &entries,
    )
    .expect("shape");
    debug_assert!(l.is_leibniz());
    l
}

/// Position in [`example_2_11`] of each basis vector of `example_3_6(1, 1)`.
pub const EXAMPLE_3_6_TO_2_11: [usize; 10] = [0, 1, 2, 3, 4, 5, 6, 8, 7, 9];

fn sl2_pair() -> LeibnizAlgebra {
    sl2()
        .direct_sum(&sl2())
        .with_labels(labels(&["e1", "h1", "f1", "e2", "h2", "f2"]))
        .expect("six labels")
}

fn tensor_labels(m: usize, n: usize) -> Vec<String> {
    (0..=m)
        .flat_map(|i| (0..=n).map(move |j| format!("x{i}y{j}")))
        .collect()
}

/// `(sl2 ⊕ sl2) ⋉ (V(m) ⊗ V(n))`.
pub fn example_3_6(m: usize, n: usize) -> Result<LeibnizAlgebra> {
    let s = sl2_pair();
    let t = tensor_module(&sl2_module(m), &sl2_module(n))?;
    let t = ModuleRep::new(s.clone(), tensor_labels(m, n), t.action().to_vec())?;
    semidirect(&s, &t)
}

/// Same construction with the alternative constant family; not a Leibniz algebra.
pub fn example_3_6_as_printed(m: usize, n: usize) -> Result<LeibnizAlgebra> {
    let s = sl2_pair();
    let (a, b) = (sl2_module_as_printed(m), sl2_module_as_printed(n));
    let mut action: Vec<RatMatrix> = a
        .action()
        .iter()
        .map(|r| r.kron(&RatMatrix::identity(n + 1)))
        .collect();
    action.extend(
        b.action()
            .iter()
            .map(|r| RatMatrix::identity(m + 1).kron(r)),
    );
    let t = ModuleRep::new_unchecked(s.clone(), tensor_labels(m, n), action)?;
    semidirect_unchecked(&s, &t)
}

/// `sl2 ⋉ (V(w_1) ⊕ ... ⊕ V(w_k))`.
pub fn sl2_semidirect(weights: &[usize]) -> Result<LeibnizAlgebra> {
    let mut module = ModuleRep::zero(sl2(), 0);
    for &w in weights {
        module = module.direct_sum(&sl2_module(w))?;
    }
    let module = module.with_labels((0..module_dim(weights)).map(|i| format!("v{i}")).collect())?;
    semidirect(&sl2(), &module)
}

fn module_dim(weights: &[usize]) -> usize {
    weights.iter().map(|w| w + 1).sum()
}

/// Index pairs `(i, j)` of the basis `E12, E13, E21, E23, E31, E32` followed by `H1, H2`.
const SL3_OFF_DIAGONAL: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];

/// The 3×3 matrix of the `k`-th basis element of [`sl3`].
pub fn sl3_matrix(k: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(3, 3);
    match k {
        0..=5 => {
            let (i, j) = SL3_OFF_DIAGONAL[k];
            m[(i, j)] = int(1);
        }
        6 => {
            m[(0, 0)] = int(1);
            m[(1, 1)] = int(-1);
        }
        7 => {
            m[(1, 1)] = int(1);
            m[(2, 2)] = int(-1);
        }
        _ => panic!("sl3 has eight basis elements"),
    }
    m
}

/// Coordinates of a traceless 3×3 matrix in the [`sl3`] basis.
pub fn sl3_coordinates(x: &RatMatrix) -> Vec<Rational> {
    let mut v: Vec<Rational> = SL3_OFF_DIAGONAL
        .iter()
        .map(|&(i, j)| x[(i, j)].clone())
        .collect();
    v.push(x[(0, 0)].clone());
    v.push(-x[(2, 2)].clone());
    v
}

/// Traceless 3×3 matrices with the commutator bracket,
/// basis `(E12, E13, E21, E23, E31, E32, H1, H2)`, `H1 = E11 - E22`, `H2 = E22 - E33`.
pub fn sl3() -> LeibnizAlgebra {
    let n = 8;
    let mut sc = vec![Rational::zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (sl3_matrix(a), sl3_matrix(b));
            let comm = x
                .try_mul(&y)
                .unwrap()
                .try_sub(&y.try_mul(&x).unwrap())
                .unwrap();
            for (k, c) in sl3_coordinates(&comm).into_iter().enumerate() {
                sc[(a * n + b) * n + k] = c;
            }
        }
    }
    LeibnizAlgebra::new(
        labels(&["E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2"]),
        sc,
    )
    .expect("shape")
}

/// `Q^3` with right action `v·x = x^T v`; transposition reverses products, so the
/// module axiom holds.
pub fn sl3_standard() -> ModuleRep {
    let action = (0..8).map(|k| sl3_matrix(k).transpose()).collect();
    ModuleRep::new(sl3(), labels(&["u1", "u2", "u3"]), action).expect("standard module")
}

/// The automorphism `x ↦ -x^T` of [`sl3`] as an 8×8 matrix.
pub fn sl3_transpose() -> RatMatrix {
    let cols: Vec<Vec<Rational>> = (0..8)
        .map(|k| {
            let t = sl3_matrix(k).transpose().scale(&int(-1));
            sl3_coordinates(&t)
        })
        .collect();
    RatMatrix::from_columns(8, &cols)
}

/// `sl3 ⋉ Q^3`.
pub fn sl3_semidirect_standard() -> LeibnizAlgebra {
    semidirect(&sl3(), &sl3_standard()).expect("sl3 semidirect standard")
}

/// Direct sum of `m` copies; labels get the suffix `_1 .. _m`.
pub fn multi_copy(l: &LeibnizAlgebra, m: usize) -> Result<LeibnizAlgebra> {
    if m == 0 {
        return Err(Error::Format("multi_copy needs at least one copy".into()));
    }
    if m == 1 {
        return Ok(l.clone());
    }
    let mut acc = l.clone();
    for _ in 1..m {
        acc = acc.direct_sum(l);
    }
    let names = (1..=m)
        .flat_map(|c| l.labels().iter().map(move |x| format!("{x}_{c}")))
        .collect();
    acc.with_labels(names)
}

/// Payload of a named catalog entry.
#[derive(Debug, Clone)]
pub enum CatalogPayload {
    Algebra(LeibnizAlgebra),
    Module(ModuleRep),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub payload: CatalogPayload,
    pub provenance: String,
}

/// Parameters accepted by [`build`].
#[derive(Debug, Clone, Default)]
pub struct BuildParams {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub weights: Vec<usize>,
    pub copies: Option<usize>,
}

pub const NAMES: [&str; 8] = [
    "sl2",
    "sl3",
    "example-2.11",
    "example-3.6",
    "example-3.6-as-printed",
    "sl2-semidirect",
    "sl3-standard",
    "sl2-module",
];

/// Builds a named entry. Algebra entries honour `copies` through [`multi_copy`].
pub fn build(name: &str, p: &BuildParams) -> Result<CatalogEntry> {
    let (payload, provenance) = match name {
        "sl2" => (CatalogPayload::Algebra(sl2()), "sl2 in the basis (e, h, f)".to_string()),
        "sl3" => (
            CatalogPayload::Algebra(sl3()),
            "sl3 in the basis (E12, E13, E21, E23, E31, E32, H1, H2)".to_string(),
        ),
        "example-2.11" => (
            CatalogPayload::Algebra(example_2_11()),
            "ten-dimensional (sl2 + sl2) semidirect the 4-dim irreducible module, constants as tabulated".to_string(),
        ),
        "example-3.6" => {
            let (m, n) = (p.m.unwrap_or(2), p.n.unwrap_or(1));
            if m == 0 || n == 0 {
                return Err(Error::Format("example-3.6 needs m, n >= 1".into()));
            }
            (
                CatalogPayload::Algebra(example_3_6(m, n)?),
                format!("(sl2 + sl2) semidirect V({m}) x V({n}); axiom-satisfying action constants"),
            )
        }
        "example-3.6-as-printed" => {
            let (m, n) = (p.m.unwrap_or(2), p.n.unwrap_or(1));
            (
                CatalogPayload::Algebra(example_3_6_as_printed(m, n)?),
                format!("(sl2 + sl2) semidirect V({m}) x V({n}) with uncorrected constants; fails the Leibniz identity"),
            )
        }
        "sl2-semidirect" => {
            let weights = if p.weights.is_empty() {
                vec![p.m.unwrap_or(1)]
            } else {
                p.weights.clone()
            };
            let w: Vec<String> = weights.iter().map(|w| format!("V({w})")).collect();
            (
                CatalogPayload::Algebra(sl2_semidirect(&weights)?),
                format!("sl2 semidirect {}", w.join(" + ")),
            )
        }
        "sl3-standard" => (
            CatalogPayload::Algebra(sl3_semidirect_standard()),
            "sl3 semidirect its standard 3-dim module (v.x = x^T v)".to_string(),
        ),
        "sl2-module" => {
            let m = p.m.unwrap_or(1);
            (
                CatalogPayload::Module(sl2_module(m)),
                format!("irreducible sl2-module V({m})"),
            )
        }
        other => {
            return Err(Error::Format(format!(
                "unknown catalog entry '{other}'; known: {}",
                NAMES.join(", ")
            )))
        }
    };
    let payload = match (payload, p.copies) {
        (CatalogPayload::Algebra(a), Some(k)) => CatalogPayload::Algebra(multi_copy(&a, k)?),
        (x, _) => x,
    };
    let name = match p.copies {
        Some(k) if k > 1 => format!("{name} x{k}"),
        _ => name.to_string(),
    };
    Ok(CatalogEntry {
        name,
        payload,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::{end_dim, is_irreducible};

    #[test]
    fn sl2_killing_and_center() {
        let g = sl2();
        let k = g.killing_form().unwrap();
        // these constants are the textbook basis with f -> -f, so κ(e, f) = -4
        // ad h = diag(-2, 0, 2) in the basis (e, h, f)
        assert_eq!(k[(0, 2)], int(-4));
        assert_eq!(k[(1, 1)], int(8));
        assert_eq!(k[(0, 0)], int(0));
        assert_eq!(g.center().dim(), 0);
        assert!(g.leibniz_defects().is_empty());
    }

    #[test]
    fn sl2_modules() {
        for m in 0..=6 {
            let v = sl2_module(m);
            assert!(v.module_check().is_empty());
            assert_eq!(end_dim(&v).unwrap(), 1, "V({m})");
        }
        let v1 = sl2_module(1);
        assert_eq!(v1.action()[1], RatMatrix::diagonal(&[int(1), int(-1)]));
        assert_eq!(v1.action()[0][(0, 1)], int(-1));
        assert!(sl2_module(0).action().iter().all(RatMatrix::is_zero));
        assert_eq!(sl2_module(2).action()[0][(1, 2)], int(-2));
    }

    #[test]
    fn as_printed_family_fails_axiom() {
        let bad = sl2_module_as_printed(2);
        let v = bad.module_check();
        assert!(v.iter().any(|w| (w.x, w.y) == (0, 1)));
    }

    #[test]
    fn ten_dimensional_fixture_basics() {
        let l = example_2_11();
        assert_eq!(l.dim(), 10);
        assert!(l.leibniz_defects().is_empty());
        assert!(!l.is_lie());
        assert_eq!(
            l.squares_ideal().unwrap().space,
            crate::exactla::Subspace::coordinate(10, &[6, 7, 8, 9])
        );
    }

    #[test]
    fn tensor_family_one_one_matches_fixture() {
        let a = example_3_6(1, 1).unwrap();
        let b = example_2_11();
        let p = EXAMPLE_3_6_TO_2_11;
        for i in 0..10 {
            for j in 0..10 {
                for k in 0..10 {
                    assert_eq!(
                        a.structure_constant(i, j, k),
                        b.structure_constant(p[i], p[j], p[k]),
                        "({i},{j},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn tensor_family_two_one() {
        let l = example_3_6(2, 1).unwrap();
        assert_eq!(l.dim(), 12);
        let lz = l.liezation().unwrap();
        let m = crate::repr::module_from_ideal(
            &l,
            &crate::exactla::Subspace::coordinate(12, &[0, 1, 2, 3, 4, 5]),
            &lz.ideal.space,
        )
        .unwrap();
        assert!(is_irreducible(&m).unwrap());
    }

    #[test]
    fn uncorrected_tensor_family_has_defects() {
        assert!(!example_3_6_as_printed(2, 1)
            .unwrap()
            .leibniz_defects()
            .is_empty());
    }

    #[test]
    fn sl3_objects() {
        let g = sl3();
        assert!(g.is_lie() && g.is_leibniz());
        assert_eq!(g.killing_form().unwrap().rank(), 8);
        assert!(sl3_standard().module_check().is_empty());
        assert!(crate::repr::is_lie_automorphism(&g, &sl3_transpose()));
    }

    #[test]
    fn semidirect_with_zero_module() {
        let s = sl2();
        let l = semidirect(&s, &ModuleRep::zero(s.clone(), 0)).unwrap();
        assert_eq!(l, s);
    }

    #[test]
    fn multi_copy_dims() {
        let l = sl2_semidirect(&[1]).unwrap();
        assert_eq!(multi_copy(&l, 1).unwrap(), l);
        let two = multi_copy(&l, 2).unwrap();
        assert_eq!(two.dim(), 10);
        assert_eq!(two.labels()[5], "e_2");
        assert!(multi_copy(&l, 0).is_err());
    }

    #[test]
    fn build_names() {
        for name in NAMES {
            build(name, &BuildParams::default()).unwrap();
        }
        assert!(build("nope", &BuildParams::default()).is_err());
    }
}
