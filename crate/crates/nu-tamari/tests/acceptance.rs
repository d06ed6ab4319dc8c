//! One line per acceptance criterion. Run with `cargo test --test acceptance`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use nu_tamari::{random, sweep};
use nu_tamari_core::complexes::{
    asso_f_vector, asso_faces_by_definition, enumerate_asso_faces, enumerate_schroder_paths,
    schroder_to_face, tc_f_vector,
};
use nu_tamari_core::paths::{degree, enumerate_nu_paths, returns, NuPath};
use nu_tamari_core::poly::{BigInt, MPoly};
use nu_tamari_core::posets::{
    atom_perspectivity_marking, multivalley_marking, poset_h_triangle, rotation_marking,
    tamari_unmarked, verify_poset_fh,
};
use nu_tamari_core::trees::{enumerate_nu_trees, right_flushing, right_flushing_inverse};
use nu_tamari_core::triangles::{
    f_triangle, h_triangle, verify_f_fvector, verify_fh_with, verify_h_hvector,
    verify_interior_duality, verify_reciprocity, VerifyOptions,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn nu(s: &str) -> NuPath {
    s.parse().unwrap()
}

fn poly(s: &str) -> MPoly {
    MPoly::parse(s, 2).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn golden() -> Outcome {
    let mut slowest = Duration::ZERO;
    let mut check =
        |name: &str, compute: &dyn Fn() -> MPoly, expected: &str| -> Result<(), String> {
            let (got, t) = timed(compute);
            slowest = slowest.max(t);
            let expected = poly(expected).to_string();
            ensure(got.to_string() == expected, || {
                format!("{name}: got {got}, expected {expected}")
            })?;
            ensure(t < Duration::from_secs(1), || format!("{name} took {t:?}"))
        };
    check(
        "F_EENEN",
        &|| f_triangle(&nu("EENEN")),
        "5x^2+3xy+y^2+8x+3y+3",
    )?;
    check(
        "H_EENEN",
        &|| h_triangle(&nu("EENEN")),
        "x^2y^2+x^2y+x^2+2xy+3x+1",
    )?;
    check(
        "F_ENEENEN",
        &|| f_triangle(&nu("ENEENEN")),
        "9x^3+9x^2y+4xy^2+y^3+20x^2+15xy+4y^2+14x+6y+3",
    )?;
    check(
        "H_ENEENEN",
        &|| h_triangle(&nu("ENEENEN")),
        "x^3y^3+x^3y^2+x^3y+3x^2y^2+5x^2y+3x^2+3xy+5x+1",
    )?;
    let (fxx, t) = timed(|| f_triangle(&nu("ENEENEN")).substitute_y_with_x());
    slowest = slowest.max(t);
    let expected = MPoly::parse("23x^3+39x^2+20x+3", 1).unwrap();
    ensure(fxx == expected, || format!("F_ENEENEN(x,x) = {fxx}"))?;
    Ok(format!("5 polynomials, slowest {slowest:.2?}"))
}

fn sweep_fh() -> Outcome {
    let words = sweep::words_up_to(9);
    let opts = VerifyOptions {
        skip_complex: true,
        ..Default::default()
    };
    let (reports, t) = timed(|| sweep::run(&words, None, |v| verify_fh_with(v, opts)));
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| {
            !(r.fh_holds
                && r.path_sum_holds
                && r.inverse_holds
                && r.schroder_holds
                && r.tree_sum_holds)
        })
        .map(|r| r.nu.to_string())
        .collect();
    ensure(words.len() == 1022, || format!("{} words", words.len()))?;
    ensure(bad.is_empty(), || format!("routes disagree for {bad:?}"))?;
    ensure(t < Duration::from_secs(300), || format!("took {t:?}"))?;
    Ok(format!("{} words, {t:.2?}", words.len()))
}

fn bijections() -> Outcome {
    let words = sweep::words_up_to(8);
    let results = sweep::run(&words, None, |v| -> Result<usize, String> {
        let trees = enumerate_nu_trees(v);
        let mut image = BTreeSet::new();
        for mu in enumerate_nu_paths(v) {
            let t = right_flushing(&mu, v).map_err(|e| format!("{v} {mu}: {e}"))?;
            ensure(right_flushing_inverse(&t).as_ref() == Ok(&mu), || {
                format!("{v} {mu}: inverse")
            })?;
            ensure(mu.val() == t.asc(), || format!("{v} {mu}: val != asc"))?;
            ensure(returns(&mu, v).unwrap().len() == t.rel(), || {
                format!("{v} {mu}: ret != rel")
            })?;
            image.insert(t.into_face());
        }
        let all: BTreeSet<_> = trees.into_iter().map(|t| t.into_face()).collect();
        ensure(image == all, || format!("{v}: Φ is not a bijection"))?;
        let deg = degree(v);
        let faces: BTreeSet<_> = enumerate_asso_faces(v)
            .into_iter()
            .map(|c| c.face().clone())
            .collect();
        let mut hit = BTreeSet::new();
        let paths = enumerate_schroder_paths(v);
        for pi in &paths {
            let c = schroder_to_face(pi, deg).map_err(|e| format!("{v} {pi}: {e}"))?;
            ensure(c.dim() == pi.diagonal_steps(), || {
                format!("{v} {pi}: dim != #D")
            })?;
            ensure(c.rel() == pi.returns().len(), || {
                format!("{v} {pi}: ret != rel")
            })?;
            ensure(hit.insert(c.face().clone()), || {
                format!("{v} {pi}: not injective")
            })?;
        }
        ensure(hit == faces, || format!("{v}: Schröder map is not onto"))?;
        Ok(paths.len())
    });
    let mut schroder = 0;
    for r in results {
        schroder += r?;
    }
    Ok(format!("{} words, {schroder} Schröder paths", words.len()))
}

fn face_counts() -> Outcome {
    let fv = asso_f_vector(&enumerate_asso_faces(&nu("ENEENEN"))).by_dimension();
    ensure(fv == [23, 39, 20, 3], || format!("f-vector {fv:?}"))?;
    let words = sweep::words_up_to(8);
    let bad: Vec<_> = sweep::run(&words, None, |v| {
        f_triangle(v).eval_at_ones() == BigInt::from(asso_faces_by_definition(v).len())
    })
    .into_iter()
    .zip(&words)
    .filter(|(ok, _)| !ok)
    .map(|(_, v)| v.to_string())
    .collect();
    ensure(bad.is_empty(), || {
        format!("F(1,1) != face count for {bad:?}")
    })?;
    Ok(format!(
        "(23, 39, 20, 3); F(1,1) over {} words",
        words.len()
    ))
}

fn face_vectors() -> Outcome {
    let words = sweep::words_up_to(8);
    let results = sweep::run(&words, None, |v| {
        [
            verify_f_fvector(v),
            verify_h_hvector(v),
            verify_interior_duality(v),
            verify_reciprocity(v),
        ]
    });
    let names = ["f-vector", "h-vector", "interior duality", "reciprocity"];
    for (v, r) in words.iter().zip(&results) {
        if let Some(i) = r.iter().position(|ok| !ok) {
            return Err(format!("{} fails for {v}", names[i]));
        }
    }
    let dim = |w: &str| tc_f_vector(&nu(w)).f.len() - 2;
    ensure(dim("EENEN") == 5 && dim("ENEENEN") == 7, || {
        format!("TC dims {} {}", dim("EENEN"), dim("ENEENEN"))
    })?;
    Ok(format!("{} words; TC dimensions 5 and 7", words.len()))
}

/// Returns the outcome and whether a failure is exactly the known misprint.
fn markings() -> (Outcome, bool) {
    const REFERENCE_H3: &str = "x^3y^3+3x^2y^2+2x^2y+x^2+3xy+2x+1";
    const REFERENCE_H3_TILDE: &str = "x^3y^3+3x^2y^2+3x^2y+3xy+3x+1";
    let v = nu("ENENEN");
    let rot = rotation_marking(&v);
    let h3 = poset_h_triangle(&rot);
    let atom = atom_perspectivity_marking(&tamari_unmarked(&v)).unwrap();
    let h3_tilde = poset_h_triangle(&atom);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let random_ok = (0..200).all(|_| verify_poset_fh(&random::random_poset(&mut rng, 10, 3)));
    let words = sweep::words_up_to(7);
    let tam_ok = sweep::run(&words, None, |w| {
        verify_poset_fh(&rotation_marking(w)) && verify_poset_fh(&multivalley_marking(w))
    })
    .into_iter()
    .all(|ok| ok);

    let mut failures = Vec::new();
    let h3_matches = h3 == poly(REFERENCE_H3);
    if !h3_matches {
        failures.push(format!(
            "rotation marking H = {h3}, reference H3 = {}",
            poly(REFERENCE_H3)
        ));
    }
    if rot.marked_count() != 14 {
        failures.push(format!("rotation marking marks {}", rot.marked_count()));
    }
    if h3_tilde != poly(REFERENCE_H3_TILDE) || atom.marked_count() != 15 {
        failures.push(format!(
            "atom-perspectivity H = {h3_tilde}, {} marked",
            atom.marked_count()
        ));
    }
    if !random_ok {
        failures.push("random posets".into());
    }
    if !tam_ok {
        failures.push("Tam(ν) markings".into());
    }
    // The reference H3 differs from H_ENENEN only in the coefficient of x (2 vs 3);
    // its coefficients sum to 13 while Tam(ENENEN) has 14 elements.
    let known_misprint = &h3 - &poly(REFERENCE_H3) == poly("x") && h3 == h_triangle(&v);
    let only_misprint = failures.len() == 1 && !h3_matches && known_misprint;
    if failures.is_empty() {
        (
            Ok("H3 and 14 marks, H~3 and 15 marks, 200 random posets, |ν| ≤ 7 markings".into()),
            false,
        )
    } else {
        (Err(failures.join("; ")), only_misprint)
    }
}

fn properties() -> Outcome {
    for v in sweep::words_up_to(8) {
        let (f, h) = (f_triangle(&v), h_triangle(&v));
        ensure(
            f.terms()
                .chain(h.terms())
                .all(|(_, c)| *c > BigInt::from(0)),
            || format!("{v}: negative"),
        )?;
    }
    for v in sweep::words_up_to(6) {
        let (f, h) = (f_triangle(&v), h_triangle(&v));
        for a in 0..=2 {
            for b in 0..=2 {
                let w = v.padded(a, b);
                ensure(f_triangle(&w) == f && h_triangle(&w) == h, || {
                    format!("{v} vs {w}")
                })?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..500 {
        let deg = rng.gen_range(0..=5u32);
        let arity = rng.gen_range(2..=4usize);
        let mut h = MPoly::zero(arity);
        for _ in 0..rng.gen_range(0..8) {
            let a = rng.gen_range(0..=deg);
            let mut budget = a;
            let mut e = vec![a];
            for _ in 1..arity {
                let b = rng.gen_range(0..=budget);
                budget -= b;
                e.push(b);
            }
            h.add_term(e, BigInt::from(rng.gen_range(-50i64..50)));
        }
        let f = h.triangle_transform(deg).map_err(|e| e.to_string())?;
        ensure(f.inverse_triangle_transform(deg).as_ref() == Ok(&h), || {
            format!("round trip fails on {h}")
        })?;
    }
    Ok("non-negativity |ν| ≤ 8, invariance |ν| ≤ 6, 500 seeded round trips".into())
}

fn main() {
    let mut hard_failures = 0;
    let mut report = |n: usize, name: &str, outcome: Outcome, tolerated: bool| {
        let (t, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        println!("criterion {n} [{t}] {name}: {detail}");
        if outcome.is_err() {
            if tolerated {
                println!("criterion {n}: failure is the known misprint in the reference H3 (coefficient of x is 3, not 2)");
            } else {
                hard_failures += 1;
            }
        }
    };
    report(1, "golden polynomials", golden(), false);
    report(2, "F=H sweep over 1 ≤ |ν| ≤ 9", sweep_fh(), false);
    report(
        3,
        "bijections with statistic transport, |ν| ≤ 8",
        bijections(),
        false,
    );
    report(4, "face counts", face_counts(), false);
    report(
        5,
        "f/h-vectors, duality and reciprocity, |ν| ≤ 8",
        face_vectors(),
        false,
    );
    let (outcome, tolerated) = markings();
    report(
        6,
        "markings and the poset F=H correspondence",
        outcome,
        tolerated,
    );
    report(7, "property suite", properties(), false);
    assert_eq!(hard_failures, 0, "acceptance criteria failed");
}
