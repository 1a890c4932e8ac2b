//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

mod common;

use std::process::{Command, ExitCode};
use std::time::Instant;

use common::RawIdeal;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stanley_core::random::{random_complex, random_filtration, random_ideal, random_monomial, IdealShape};
use stanley_core::{fdepth, poset, MonomialIdeal, PrimeFiltration, SearchLimits, VarSubset};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome>);

fn shape(max_vars: usize) -> IdealShape {
    IdealShape {
        min_vars: 1,
        max_vars,
        max_exponent: 2,
        max_generators: 5,
    }
}

fn sdepth_opt(ideal: &MonomialIdeal, limits: &SearchLimits) -> Result<Option<usize>, String> {
    if ideal.is_unit() {
        return Ok(None);
    }
    poset::sdepth(ideal, limits).map(|r| Some(r.value)).map_err(|e| e.to_string())
}

fn criterion_1() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_stanley"))
        .args(["--json", "paper-examples"])
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(format!("paper-examples exited {:?}", out.status.code()));
    }
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let rows = v["rows"].as_array().ok_or("no rows")?;
    let got: Vec<(u64, u64, String)> = rows
        .iter()
        .map(|r| {
            (
                r["sdepth_before"].as_u64().unwrap_or(99),
                r["sdepth_after"].as_u64().unwrap_or(99),
                r["localized"].as_str().unwrap_or("").to_string(),
            )
        })
        .collect();
    let want: Vec<(u64, u64, String)> = vec![
        (1, 0, "(y)".into()),
        (0, 0, "(x)".into()),
        (2, 1, "(x*y)".into()),
        (1, 2, "(x)".into()),
    ];
    if got != want {
        return Err(format!("got {got:?}"));
    }
    if v["all_pass"] != serde_json::Value::Bool(true) {
        return Err("decomposition checks failed".into());
    }
    Ok("sdepth (1,0,2,1) -> (0,0,1,2), targets (y),(x),(x*y),(x)".into())
}

fn criterion_2(limits: &SearchLimits) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut checks, mut vacuous, mut strict) = (0, 0, 0);
    for _ in 0..300 {
        let ideal = random_ideal(&mut rng, &shape(4));
        let before = sdepth_opt(&ideal, limits)?.expect("proper ideal");
        for j in 0..ideal.num_vars() {
            let local = ideal.localize(j).map_err(|e| e.to_string())?;
            match sdepth_opt(&local, limits)? {
                None => vacuous += 1,
                Some(after) => {
                    checks += 1;
                    if after + 1 < before {
                        return Err(format!("{} at {j}: {before} -> {after}", ideal.display()));
                    }
                    strict += usize::from(after > before);
                }
            }
        }
    }
    Ok(format!("{checks} localizations hold ({vacuous} zero quotients, {strict} strict increases)"))
}

fn criterion_3(limits: &SearchLimits) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checks = 0;
    for _ in 0..200 {
        let ideal = random_ideal(&mut rng, &shape(4));
        let p = poset::CharacteristicPoset::new(&ideal, limits).map_err(|e| e.to_string())?;
        let r = p.sdepth(limits).map_err(|e| e.to_string())?;
        let dec = p.partition_to_decomposition(&r.partition).map_err(|e| e.to_string())?;
        for j in 0..ideal.num_vars() {
            let image = dec.localize(j).map_err(|e| format!("{} at {j}: {e}", ideal.display()))?;
            if !image.verify().map_err(|e| e.to_string())?.is_valid() {
                return Err(format!("{} at {j}", ideal.display()));
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} localized optimal decompositions Valid"))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let ideal = random_ideal(&mut rng, &shape(4));
        let n = ideal.num_vars();
        let a = random_monomial(&mut rng, n, 3);
        let j = rng.random_range(0..n);
        let left = ideal.colon(&a).and_then(|c| c.localize(j)).map_err(|e| e.to_string())?;
        let right = ideal
            .localize(j)
            .and_then(|l| l.colon(&a.project_out(j)?))
            .map_err(|e| e.to_string())?;
        if left != right {
            return Err(format!("{} : {:?} at {j}", ideal.display(), a.exponents()));
        }
    }
    Ok("500 triples commute".into())
}

fn criterion_5(limits: &SearchLimits) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut clean, mut pretty, mut localized) = (0, 0, 0);
    for k in 0..100 {
        let ideal = random_ideal(&mut rng, &shape(3));
        let f: PrimeFiltration = if k % 2 == 0 {
            fdepth(&ideal, 0, limits).map_err(|e| e.to_string())?.filtration
        } else {
            random_filtration(&mut rng, &ideal).map_err(|e| e.to_string())?
        };
        if !f.verify().is_valid() {
            return Err(format!("constructed filtration of {} invalid", ideal.display()));
        }
        let is_clean = f.is_clean().map_err(|e| e.to_string())?;
        let is_pretty = f.is_pretty_clean().map_err(|e| e.to_string())?;
        clean += usize::from(is_clean);
        pretty += usize::from(is_pretty);
        for j in 0..ideal.num_vars() {
            let g = f.localize(j).map_err(|e| format!("{} at {j}: {e}", ideal.display()))?;
            if !g.verify().is_valid() {
                return Err(format!("{} at {j}: localized filtration invalid", ideal.display()));
            }
            if is_clean && !g.is_clean().map_err(|e| e.to_string())? {
                return Err(format!("{} at {j}: cleanness lost", ideal.display()));
            }
            if is_pretty && !g.is_pretty_clean().map_err(|e| e.to_string())? {
                return Err(format!("{} at {j}: pretty cleanness lost", ideal.display()));
            }
            localized += 1;
        }
    }
    if clean == 0 || pretty == 0 {
        return Err(format!("sample lacks clean ({clean}) or pretty clean ({pretty}) filtrations"));
    }
    Ok(format!("{localized} localizations Valid; {clean} clean, {pretty} pretty clean, flags preserved"))
}

fn fdepth_opt(ideal: &MonomialIdeal, limits: &SearchLimits) -> Result<Option<usize>, String> {
    if ideal.is_unit() {
        return Ok(None);
    }
    fdepth(ideal, 0, limits).map(|r| Some(r.value)).map_err(|e| e.to_string())
}

fn criterion_6(limits: &SearchLimits) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checks = 0;
    for _ in 0..100 {
        let ideal = random_ideal(&mut rng, &shape(3));
        let before = fdepth_opt(&ideal, limits)?.expect("proper ideal");
        let sd = sdepth_opt(&ideal, limits)?.expect("proper ideal");
        if before > sd {
            return Err(format!("{}: fdepth {before} > sdepth {sd}", ideal.display()));
        }
        for j in 0..ideal.num_vars() {
            let local = ideal.localize(j).map_err(|e| e.to_string())?;
            if let Some(after) = fdepth_opt(&local, limits)? {
                if after + 1 < before {
                    return Err(format!("{} at {j}: fdepth {before} -> {after}", ideal.display()));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} localizations hold; fdepth <= sdepth on all 100"))
}

fn criterion_7(limits: &SearchLimits) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut faces = 0;
    for _ in 0..200 {
        let c = random_complex(&mut rng, 1, 6);
        let n = c.vertices().len();
        for v in (0..n).filter(|&v| c.is_face(VarSubset::singleton(v))) {
            if !c.check_link_lemma(v).map_err(|e| e.to_string())? {
                return Err(format!("lemma fails at vertex {v} of {:?}", c.facets()));
            }
        }
        let base = poset::sdepth(&c.stanley_reisner_ideal().map_err(|e| e.to_string())?, limits)
            .map_err(|e| e.to_string())?
            .value;
        for _ in 0..3 {
            let facet = *c.facets().choose(&mut rng).expect("not void");
            let members: Vec<usize> = facet.iter().collect();
            let size = rng.random_range(0..=members.len().min(2));
            let face = VarSubset::from_indices(members.choose_multiple(&mut rng, size).copied());
            let direct = c.link(face).map_err(|e| e.to_string())?;
            let iterated = c.iterated_link(face).map_err(|e| e.to_string())?;
            if direct != iterated {
                return Err(format!("link routes differ for {face:?} in {:?}", c.facets()));
            }
            let sd = |x: &stanley_core::SimplicialComplex| -> Result<usize, String> {
                let i = x.stanley_reisner_ideal().map_err(|e| e.to_string())?;
                poset::sdepth(&i, limits).map(|r| r.value).map_err(|e| e.to_string())
            };
            let (a, b) = (sd(&direct)?, sd(&iterated)?);
            if a != b || a + face.len() < base {
                return Err(format!("{:?} face {face:?}: base {base}, direct {a}, iterated {b}", c.facets()));
            }
            faces += 1;
        }
    }
    Ok(format!("lemma holds at every vertex; {faces} faces satisfy the link bound by both routes"))
}

fn criterion_8(limits: &SearchLimits) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut found, mut tried) = (0, 0);
    while found < 100 {
        tried += 1;
        if tried > 100_000 {
            return Err(format!("only {found} instances with <= 20 points"));
        }
        let raw = RawIdeal::random(&mut rng, 4, 2, 5);
        if raw.poset_points().len() > 20 {
            continue;
        }
        let got = poset::sdepth(&raw.to_ideal(), limits).map_err(|e| e.to_string())?.value;
        let want = common::oracle_sdepth(&raw);
        if got != want {
            return Err(format!("{:?}: search {got}, oracle {want}", raw.gens));
        }
        found += 1;
    }
    Ok("100 instances agree with the exhaustive oracle".into())
}

fn main() -> ExitCode {
    let limits = SearchLimits::default();
    let criteria: Vec<Criterion> = vec![
        ("1 worked examples", Box::new(criterion_1)),
        ("2 sdepth under localization", Box::new(move || criterion_2(&limits))),
        ("3 localized optimal decompositions", Box::new(move || criterion_3(&limits))),
        ("4 colon commutes with localization", Box::new(criterion_4)),
        ("5 localized prime filtrations", Box::new(move || criterion_5(&limits))),
        ("6 fdepth under localization", Box::new(move || criterion_6(&limits))),
        ("7 links of simplicial complexes", Box::new(move || criterion_7(&limits))),
        ("8 oracle equivalence", Box::new(move || criterion_8(&limits))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{secs:.2}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{secs:.2}s]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
