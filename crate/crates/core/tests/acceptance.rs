//! Acceptance suite: eleven criteria, each checked exactly and reported on one line.
//! Runs without the libtest harness so the report is always printed.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::Instant;

use leibniz::algebra::LeibnizAlgebra;
use leibniz::autos::{
    assemble, block_decompose, exp_ad, exp_right_mult, extendable, factor_semidirect,
    is_automorphism, scalar_on_i, swap_automorphism, BlockDecomposition,
};
use leibniz::catalog::{
    example_2_11, example_3_6, multi_copy, sl2_module, sl2_semidirect, sl3,
    sl3_semidirect_standard, sl3_standard, sl3_transpose, BuildParams,
};
use leibniz::cli::{analyze, cmd_analyze, cmd_build, cmd_verify, AlgebraFile};
use leibniz::deriv::{derivation_space, formula_report, split_derivations};
use leibniz::exactla::{unit, RatMatrix, Subspace};
use leibniz::repr::{end_dim, hom_space, tensor_module};
use leibniz::structure::levi_lift;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn suite() -> Vec<(&'static str, LeibnizAlgebra)> {
    vec![
        ("sl2+V(1)", sl2_semidirect(&[1]).unwrap()),
        ("sl2+V(2)", sl2_semidirect(&[2]).unwrap()),
        ("sl2+2V(1)", sl2_semidirect(&[1, 1]).unwrap()),
        ("sl2+(V(1)+V(2))", sl2_semidirect(&[1, 2]).unwrap()),
        ("example_2_11", example_2_11()),
        ("example_3_6(2,1)", example_3_6(2, 1).unwrap()),
        ("sl3+Q^3", sl3_semidirect_standard()),
    ]
}

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn c1_fixture_fidelity() -> Check {
    let built = cmd_build("example-2.11", &BuildParams::default());
    ensure(built.code == 0, "build failed")?;
    let path = std::env::temp_dir().join(format!("leibniz-acc-{}-2_11.json", std::process::id()));
    std::fs::write(&path, &built.stdout).map_err(|e| e.to_string())?;
    let verify = cmd_verify(&path);
    let _ = std::fs::remove_file(&path);
    ensure(verify.code == 0, format!("verify exit {}", verify.code))?;
    let l = AlgebraFile::parse(&built.stdout)
        .unwrap()
        .to_algebra()
        .unwrap();
    ensure(common::is_leibniz(&l), "oracle Leibniz check fails")?;
    let r = analyze(&l);
    ensure(r.dim == 10, "dim L")?;
    ensure(r.dim_I == Some(4), format!("dim I = {:?}", r.dim_I))?;
    ensure(r.semisimple == Some(true), "liezation not semisimple")?;
    let levi = levi_lift(&l).map_err(|e| e.to_string())?;
    let imod = levi.i_module(&l).unwrap();
    ensure(end_dim(&imod).unwrap() == 1, "I not irreducible")?;
    ensure(common::hom_dim(&imod, &imod) == 1, "oracle End(I) != 1")?;
    ensure(
        r.summand_count == Some(1),
        format!("summands {:?}", r.summand_count),
    )?;
    Ok("dim 10, dim I 4, semisimple, End(I) = 1, one summand".into())
}

fn c2_derivation_oracle() -> Check {
    let mut lines = Vec::new();
    for (name, l) in suite() {
        let f = formula_report(&l).map_err(|e| format!("{name}: {e}"))?;
        let oracle = common::der_dim(&l);
        ensure(
            f.brute_dim == oracle,
            format!("{name}: kernel {} vs oracle {oracle}", f.brute_dim),
        )?;
        ensure(
            f.brute_dim == f.structural_dim,
            format!("{name}: {} != {}", f.brute_dim, f.structural_dim),
        )?;
        if f.all_n_one() {
            ensure(
                f.brute_dim == f.formula_dim,
                format!("{name}: formula {}", f.formula_dim),
            )?;
        }
        lines.push(format!("{name}={}", f.brute_dim));
    }
    Ok(lines.join(" "))
}

fn c3_split() -> Check {
    for (name, l) in suite() {
        let levi = levi_lift(&l).map_err(|e| e.to_string())?;
        let d = split_derivations(&l, &derivation_space(&l), &levi)
            .map_err(|e| format!("{name}: {e}"))?;
        let s = d.split.as_ref().unwrap();
        let (a, b, c) = s.dims();
        ensure(a == levi.s_dim(), format!("{name}: dim R_S {a}"))?;
        ensure(
            a + b + c == d.dim(),
            format!("{name}: {a}+{b}+{c} != {}", d.dim()),
        )?;
        let all: Vec<Vec<_>> = s
            .r_s
            .iter()
            .chain(&s.der_si)
            .chain(&s.der_ii)
            .map(|m| m.entries().to_vec())
            .collect();
        ensure(
            common::rank(all) == d.dim(),
            format!("{name}: parts dependent"),
        )?;
    }
    Ok("all suite members split with dim R_S = dim S".into())
}

fn c4_direct_sums() -> Check {
    let s = suite();
    let dims: Vec<usize> = s.iter().map(|(_, l)| derivation_space(l).dim()).collect();
    let mut pairs = 0;
    for i in 0..s.len() {
        ensure(
            s[i].1.derived() == Subspace::full(s[i].1.dim()),
            format!("{} not perfect", s[i].0),
        )?;
        for j in i..s.len() {
            let sum = s[i].1.direct_sum(&s[j].1);
            let d = derivation_space(&sum).dim();
            ensure(
                d == dims[i] + dims[j],
                format!("{} + {}: {d}", s[i].0, s[j].0),
            )?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs additive"))
}

fn c5_schur() -> Check {
    let v = sl2_module(1);
    for m in 1..=3 {
        for n in 1..=3 {
            let (a, b) = (v.multiple(m).unwrap(), v.multiple(n).unwrap());
            let h = hom_space(&a, &b).unwrap().dim();
            ensure(h == m * n, format!("hom({m}V, {n}V) = {h}"))?;
            ensure(common::hom_dim(&a, &b) == m * n, "oracle disagrees")?;
        }
    }
    Ok("dim hom(mV(1), nV(1)) = mn for 1 <= m, n <= 3".into())
}

fn c6_tensor_irreducible() -> Check {
    for m in 1..=3 {
        for n in 1..=3 {
            let t = tensor_module(&sl2_module(m), &sl2_module(n)).unwrap();
            ensure(
                end_dim(&t).unwrap() == 1,
                format!("End(V({m}) x V({n})) != 1"),
            )?;
            ensure(common::hom_dim(&t, &t) == 1, "oracle disagrees")?;
        }
    }
    Ok("End(V(m) x V(n)) = 1 for 1 <= m, n <= 3".into())
}

fn c7_levi() -> Check {
    let l = example_2_11();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in 0..10 {
        let b = common::unimodular(10, &mut rng);
        let l2 = l.change_basis(&b).map_err(|e| e.to_string())?;
        let levi = levi_lift(&l2).map_err(|e| format!("trial {t}: {e}"))?;
        let ss = l2.bracket_span(&levi.s, &levi.s);
        ensure(
            levi.s.contains(&ss).unwrap(),
            format!("trial {t}: [S,S] not in S"),
        )?;
        ensure(
            levi.s.intersect(&levi.i.space).unwrap().is_zero(),
            format!("trial {t}: S meets I"),
        )?;
        ensure(
            levi.s.dim() == 6,
            format!("trial {t}: dim S {}", levi.s.dim()),
        )?;
    }
    Ok("10 conjugates lifted, dim S = 6".into())
}

fn c8_factorization() -> Check {
    let l = example_2_11();
    let levi = levi_lift(&l).unwrap();
    let (g, d) = (levi.s_dim(), levi.i_dim());
    let mut gens: Vec<RatMatrix> = [0usize, 2, 3, 5]
        .iter()
        .flat_map(|&k| {
            let x = unit(10, k);
            let neg: Vec<_> = x.iter().map(|c| -c.clone()).collect();
            [
                exp_right_mult(&l, &x).unwrap(),
                exp_right_mult(&l, &neg).unwrap(),
            ]
        })
        .collect();
    for c in [2, -1, 3] {
        gens.push(scalar_on_i(&l, &levi, c).unwrap().matrix);
    }
    let (sm, im) = (levi.s_module().unwrap(), levi.i_module(&l).unwrap());
    for h in hom_space(&sm, &im).unwrap().basis {
        let b = BlockDecomposition {
            phi1: RatMatrix::identity(g),
            phi2: h,
            phi_i: RatMatrix::identity(d),
        };
        gens.push(assemble(&l, &levi, &b).unwrap().matrix);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for t in 0..20 {
        let mut phi = RatMatrix::identity(10);
        for _ in 0..rng.gen_range(2..6) {
            phi = phi.try_mul(&gens[rng.gen_range(0..gens.len())]).unwrap();
        }
        ensure(
            is_automorphism(&l, &phi),
            format!("sample {t} not an automorphism"),
        )?;
        let (psi, eta) =
            factor_semidirect(&l, &phi, &levi).map_err(|e| format!("sample {t}: {e}"))?;
        ensure(
            psi.matrix.try_mul(&eta.matrix).unwrap() == phi,
            format!("sample {t}: psi eta != phi"),
        )?;
        let pb = block_decompose(&l, &psi.matrix, &levi).unwrap();
        ensure(
            pb.phi2.is_zero(),
            format!("sample {t}: psi has a phi2 block"),
        )?;
        let eb = block_decompose(&l, &eta.matrix, &levi).unwrap();
        ensure(
            eb.phi1 == RatMatrix::identity(g) && eb.phi_i == RatMatrix::identity(d),
            format!("sample {t}: eta diagonal blocks"),
        )?;
    }
    Ok("20 samples factor exactly".into())
}

fn c9_extension() -> Check {
    let std = sl3_standard();
    let twisted = leibniz::repr::twist_module(&std, &sl3_transpose()).unwrap();
    ensure(
        hom_space(&std, &twisted).unwrap().dim() == 0,
        "hom(V, V^sigma) != 0",
    )?;
    ensure(common::hom_dim(&std, &twisted) == 0, "oracle hom != 0")?;
    ensure(
        !extendable(&sl3_transpose(), &std).unwrap(),
        "-transpose extends",
    )?;
    let inner = exp_ad(&sl3(), &unit(8, 0)).unwrap();
    ensure(
        extendable(&inner, &std).unwrap(),
        "exp(ad E12) does not extend",
    )?;
    Ok("-transpose not extendable (hom 0), exp(ad E12) extendable".into())
}

fn c10_swaps() -> Check {
    let l = multi_copy(&sl2_semidirect(&[1]).unwrap(), 2).unwrap();
    let perms = [[0usize, 1], [1, 0]];
    let mats: Vec<RatMatrix> = perms
        .iter()
        .map(|p| swap_automorphism(&l, 2, p).unwrap())
        .collect();
    for (p, m) in perms.iter().zip(&mats) {
        ensure(is_automorphism(&l, m), format!("{p:?} not an automorphism"))?;
    }
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            let comp = [pa[pb[0]], pa[pb[1]]];
            let c = perms.iter().position(|p| *p == comp).unwrap();
            ensure(
                mats[a].try_mul(&mats[b]).unwrap() == mats[c],
                "composition law",
            )?;
        }
    }
    Ok("both permutations are automorphisms; P(a)P(b) = P(a o b)".into())
}

fn c11_determinism() -> Check {
    let mut n = 0;
    for entry in std::fs::read_dir(fixture_dir()).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        let a = cmd_analyze(&path);
        let b = cmd_analyze(&path);
        ensure(a.code == 0, format!("{}: exit {}", path.display(), a.code))?;
        ensure(a == b, format!("{}: outputs differ", path.display()))?;
        n += 1;
    }
    ensure(n >= 3, "fewer than three fixtures")?;
    Ok(format!("{n} fixtures byte-identical across runs"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("fixture fidelity", c1_fixture_fidelity),
        ("derivation oracle vs structure", c2_derivation_oracle),
        ("derivation split", c3_split),
        ("derivations of direct sums", c4_direct_sums),
        ("hom between multiples", c5_schur),
        ("tensor products irreducible", c6_tensor_irreducible),
        ("Levi lifting under basis change", c7_levi),
        ("semidirect factorization", c8_factorization),
        ("extension of automorphisms", c9_extension),
        ("block permutations", c10_swaps),
        ("analyze determinism", c11_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
