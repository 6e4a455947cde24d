//! End-to-end acceptance gate over the checked-in session corpus.
//! Each criterion prints a single pass/fail line.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use serde_json::json;

use linkage::free::FreeModule;
use linkage::homology;
use linkage::invariants::{self, Bounded};
use linkage::module::PresentedModule;
use linkage::operators::{self, DEFAULT_BOUND};
use linkage::oracle;
use linkage::ring::{Ring, TriState};
use linkage::runner::{self, sort_json, Objects, RunOutput};
use linkage::session::parse_session;
use linkage::theorems::{self, Status, TheoremContext, VerificationRecord};

type CheckResult = Result<(), String>;

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn stem(p: &Path) -> String {
    p.file_stem().unwrap().to_string_lossy().into_owned()
}

fn lk_files(dir: &Path) -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "lk"))
        .collect();
    files.sort();
    files
}

fn run_corpus() -> Vec<(String, RunOutput)> {
    lk_files(&corpus_dir())
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).unwrap();
            let session = parse_session(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
            let out = runner::run_session(&session, &stem(p), None)
                .unwrap_or_else(|e| panic!("{}: {e}", p.display()));
            (stem(p), out)
        })
        .collect()
}

fn runs() -> &'static [(String, RunOutput)] {
    static RUNS: OnceLock<Vec<(String, RunOutput)>> = OnceLock::new();
    RUNS.get_or_init(run_corpus)
}

fn objects() -> &'static [(String, Objects)] {
    static OBJS: OnceLock<Vec<(String, Objects)>> = OnceLock::new();
    OBJS.get_or_init(|| {
        lk_files(&corpus_dir())
            .iter()
            .map(|p| {
                let text = std::fs::read_to_string(p).unwrap();
                let session = parse_session(&text).unwrap();
                let objs = runner::build_objects(&session)
                    .unwrap_or_else(|e| panic!("{}: {e}", p.display()));
                (stem(p), objs)
            })
            .collect()
    })
}

fn records(theorem: &str) -> Vec<&'static VerificationRecord> {
    runs()
        .iter()
        .flat_map(|(_, out)| out.verifications.iter())
        .filter(|r| r.theorem == theorem)
        .collect()
}

/// No failures and at least one genuine pass for the given theorem id.
fn covered(theorem: &str) -> CheckResult {
    let recs = records(theorem);
    let fails = recs.iter().filter(|r| r.status == Status::Fail).count();
    let passes = recs.iter().filter(|r| r.status == Status::Pass).count();
    if fails > 0 {
        return Err(format!("{theorem}: {fails} corpus failure(s)"));
    }
    if passes == 0 {
        return Err(format!("{theorem}: no passing corpus instance"));
    }
    Ok(())
}

fn r_free(ring: &Ring) -> PresentedModule {
    PresentedModule::free(FreeModule::new(ring.clone(), vec![0]))
}

fn ring_key(ring: &Ring) -> String {
    format!("{:?} {:?}", ring.vars(), ring.ideal())
}

fn distinct_rings() -> Vec<Ring> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (_, objs) in objects() {
        for ring in objs.rings.values() {
            if seen.insert(ring_key(ring)) {
                out.push(ring.clone());
            }
        }
    }
    out
}

fn residue_field_over_r_xy() -> PresentedModule {
    let text = "ring R = F101[x,y]/(x*y);\nmodule K = R/(x, y);\n";
    let objs = runner::build_objects(&parse_session(text).unwrap()).unwrap();
    objs.modules.into_iter().next().unwrap().1
}

fn verify_one(id: &str, m: &PresentedModule) -> VerificationRecord {
    let cx = TheoremContext {
        fixture: format!("acceptance:{id}"),
        module: m,
        ideals: BTreeMap::new(),
        bound: DEFAULT_BOUND,
    };
    theorems::verify(id, &cx).unwrap()
}

fn criterion(n: usize, name: &str, result: CheckResult) {
    match result {
        Ok(()) => println!("acceptance criterion {n} ({name}): pass"),
        Err(e) => {
            println!("acceptance criterion {n} ({name}): fail - {e}");
            panic!("criterion {n} ({name}) failed: {e}");
        }
    }
}

#[test]
fn criterion_01_oracle_equivalence() {
    criterion(1, "oracle equivalence", (|| {
        let mut mismatches = Vec::new();
        let mut modules = 0usize;
        for (file, objs) in objects() {
            for (name, m) in &objs.modules {
                modules += 1;
                mismatches.extend(
                    oracle::check_module(&format!("{file}:{name}"), m, oracle::D_ORACLE)
                        .map_err(|e| format!("{file}:{name}: {e}"))?,
                );
            }
        }
        if !mismatches.is_empty() {
            return Err(mismatches.join("; "));
        }
        if modules < 10 {
            return Err(format!("only {modules} fixture modules (need >= 10)"));
        }
        let rings = distinct_rings().len();
        if rings < 4 {
            return Err(format!("only {rings} distinct rings (need >= 4)"));
        }
        Ok(())
    })());
}

#[test]
fn criterion_02_horizontal_linkage_ms() {
    criterion(2, "theorem MS", (|| {
        let err = |e: linkage::error::Error| e.to_string();
        let mut positives = 0usize;
        let mut saw_negative_k = false;
        let mut saw_positive_mx = false;
        for (file, objs) in objects() {
            for (name, m) in &objs.modules {
                if m.is_zero() {
                    continue;
                }
                let hl = operators::is_horizontally_linked(m).map_err(err)?;
                // recompute the criterion from its parts
                let stable = homology::is_stable(m).map_err(err)?;
                let tr = operators::transpose(m).map_err(err)?;
                let e1 = homology::ext(&tr, &r_free(m.ring()), 1).map_err(err)?;
                let indep = stable && e1.is_zero();
                if hl != indep {
                    return Err(format!(
                        "{file}:{name}: is_horizontally_linked {hl} vs criterion {indep}"
                    ));
                }
                if file == "hypersurface" && name == "K" {
                    saw_negative_k = true;
                    if hl {
                        return Err("k over F101[x,y]/(xy) reported as linked".into());
                    }
                }
                if file == "hypersurface" && name == "Mx" {
                    saw_positive_mx = true;
                    if !hl {
                        return Err("R/(x) over F101[x,y]/(xy) reported as unlinked".into());
                    }
                }
                if hl {
                    positives += 1;
                    let l2 = operators::lambda(&operators::lambda(m).map_err(err)?).map_err(err)?;
                    if !operators::congruent(&l2, m).map_err(err)? {
                        return Err(format!("{file}:{name}: lambda^2 not congruent"));
                    }
                }
            }
        }
        if !saw_negative_k || !saw_positive_mx {
            return Err("required hypersurface fixtures missing".into());
        }
        if positives < 2 {
            return Err(format!("only {positives} linked positive(s)"));
        }
        covered("MS")
    })());
}

#[test]
fn criterion_03_auslander_bridger_formula() {
    criterion(3, "Auslander-Bridger formula", (|| {
        let err = |e: linkage::error::Error| e.to_string();
        let mut checked = 0usize;
        let mut gdims = BTreeSet::new();
        for (file, objs) in objects() {
            for (name, m) in &objs.modules {
                if m.is_zero() {
                    continue;
                }
                let Bounded::Exact { value } = invariants::gdim(m, objs.bound).map_err(err)?
                else {
                    continue;
                };
                let depth = invariants::depth(m).map_err(err)?;
                let ring_depth = invariants::ring_depth(m.ring());
                if depth + value != ring_depth {
                    return Err(format!(
                        "{file}:{name}: depth {depth} + gdim {value} != depth R {ring_depth}"
                    ));
                }
                checked += 1;
                gdims.insert(value);
            }
        }
        if checked < 6 {
            return Err(format!("only {checked} finite-gdim fixtures (need >= 6)"));
        }
        if !gdims.contains(&0) || !gdims.contains(&1) {
            return Err(format!("gdim values seen: {gdims:?} (need 0 and 1)"));
        }
        covered("AB-formula")
    })());
}

#[test]
fn criterion_04_depth_identity_thm_d() {
    criterion(4, "theorem d depth identity", (|| {
        covered("Thm-d")?;
        let k = residue_field_over_r_xy();
        let rec = verify_one("Thm-d", &k);
        if rec.status != Status::Pass {
            return Err(format!("k over F101[x,y]/(xy): status {:?}", rec.status));
        }
        for (key, want) in [("depth_m", 0), ("depth_lambda", 1), ("d", 1), ("depth_ext_n", 0)] {
            if rec.witness.get(key) != Some(&json!(want)) {
                return Err(format!("witness {key}: {:?}, want {want}", rec.witness.get(key)));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_05_cor_a_bridge() {
    criterion(5, "corollary A bridge", (|| {
        let err = |e: linkage::error::Error| e.to_string();
        let mut compared = 0usize;
        for (file, objs) in objects() {
            for (name, m) in &objs.modules {
                if m.is_zero()
                    || !operators::is_horizontally_linked(m).map_err(err)?
                    || !invariants::gdim(m, objs.bound).map_err(err)?.is_finite_claim()
                {
                    continue;
                }
                let lam = operators::lambda(m).map_err(err)?;
                let rg = invariants::reduced_grade(&lam, objs.bound).map_err(err)?;
                for k in 1..=3u32 {
                    let lhs = operators::satisfies_tilde_s(m, k).map_err(err)?;
                    let rhs = match rg {
                        Bounded::Exact { value } | Bounded::UpToBound { value, .. } => value >= k,
                        Bounded::Infinite => true,
                        // the bound cannot decide rg >= k
                        Bounded::AtLeast { bound } if bound < k => continue,
                        Bounded::AtLeast { .. } => true,
                    };
                    if lhs != rhs {
                        return Err(format!(
                            "{file}:{name} k={k}: tilde_S {lhs} vs reduced_grade(lambda) {rhs}"
                        ));
                    }
                    compared += 1;
                }
            }
        }
        if compared < 6 {
            return Err(format!("only {compared} comparisons (need >= 6)"));
        }
        covered("CorA")
    })());
}

#[test]
fn criterion_06_serre_via_local_cohomology() {
    criterion(6, "Serre via local cohomology", (|| {
        let err = |e: linkage::error::Error| e.to_string();
        let mut compared = 0usize;
        for (file, objs) in objects() {
            for (name, m) in &objs.modules {
                let ring = m.ring();
                if m.is_zero()
                    || invariants::ring_dim(ring) < 2
                    || !invariants::is_cm_ring(ring)
                    // the theorem's hypotheses
                    || !operators::is_horizontally_linked(m).map_err(err)?
                    || !invariants::gdim(m, objs.bound).map_err(err)?.is_finite_claim()
                {
                    continue;
                }
                for k in 1..=2u32 {
                    let lhs = operators::serre_via_local_cohomology(m, k).map_err(err)?;
                    let rhs = operators::satisfies_tilde_s(m, k).map_err(err)?;
                    if lhs != rhs {
                        return Err(format!(
                            "{file}:{name} k={k}: local cohomology {lhs} vs tilde_S {rhs}"
                        ));
                    }
                    compared += 1;
                }
            }
        }
        if compared < 4 {
            return Err(format!("only {compared} comparisons over dim >= 2 rings"));
        }
        covered("S4-theorem")?;
        covered("Lemma-l1")
    })());
}

#[test]
fn criterion_07_hilbert_series_identities() {
    criterion(7, "Hilbert series identities", (|| {
        covered("Prop-P1")?;
        covered("Lemma-p2")?;
        covered("seq-e")
    })());
}

#[test]
fn criterion_08_semidualizing_suite() {
    criterion(8, "semidualizing suite", (|| {
        let err = |e: linkage::error::Error| e.to_string();
        let mut gorenstein = 0usize;
        for ring in distinct_rings() {
            let r = r_free(&ring);
            let sc = operators::is_semidualizing(&r, DEFAULT_BOUND).map_err(err)?;
            if !sc.verdict {
                return Err(format!("{}: R not semidualizing over itself", ring_key(&ring)));
            }
            if invariants::is_gorenstein_ring(&ring) != TriState::Yes {
                continue;
            }
            gorenstein += 1;
            let omega = invariants::canonical_module(&ring).map_err(err)?;
            let min = omega.minimal();
            if min.cover().rank() != 1 || min.pres().source.rank() != 0 {
                return Err(format!("{}: canonical module not free cyclic", ring_key(&ring)));
            }
            let a = min.cover().shifts[0];
            let twisted = PresentedModule::free(FreeModule::new(ring.clone(), vec![a]));
            if !operators::congruent(min, &twisted).map_err(err)? {
                return Err(format!(
                    "{}: canonical module not congruent to R({})",
                    ring_key(&ring),
                    -a
                ));
            }
        }
        if gorenstein < 1 {
            return Err("no Gorenstein fixture rings".into());
        }
        covered("Prop-p4")?;
        covered("Cor-end")
    })());
}

#[test]
fn criterion_09_negative_controls() {
    criterion(9, "negative controls", (|| {
        let dir = corpus_dir().join("negative");
        let files = lk_files(&dir);
        if files.len() < 3 {
            return Err(format!("only {} negative fixtures (need >= 3)", files.len()));
        }
        for p in &files {
            let text = std::fs::read_to_string(p).map_err(|e| e.to_string())?;
            let session = parse_session(&text).map_err(|e| e.to_string())?;
            let out = runner::run_session(&session, &stem(p), None).map_err(|e| e.to_string())?;
            if out.failures() != 1 {
                return Err(format!("{}: {} failures, want exactly 1", stem(p), out.failures()));
            }
            let bad = out
                .verifications
                .iter()
                .chain(&out.claims)
                .find(|r| r.status == Status::Fail)
                .unwrap();
            let (claimed, computed) = (bad.witness.get("claimed"), bad.witness.get("computed"));
            if claimed.is_none() || computed.is_none() || claimed == computed {
                return Err(format!("{}: failure lacks a concrete witness", stem(p)));
            }
        }
        // hypothesis failure must read as inapplicable, never as a pass
        let k = residue_field_over_r_xy();
        for id in ["CorA", "Thm-t", "Lemma-l3-at-m"] {
            let rec = verify_one(id, &k);
            if rec.status != Status::Inapplicable {
                return Err(format!("{id} on unlinked k: status {:?}", rec.status));
            }
            if rec.witness.is_empty() {
                return Err(format!("{id} on unlinked k: no reason recorded"));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_10_determinism() {
    criterion(10, "determinism", (|| {
        let render = |outs: Vec<(String, RunOutput)>| {
            let files: BTreeMap<String, serde_json::Value> =
                outs.into_iter().map(|(n, o)| (n, o.to_json())).collect();
            serde_json::to_string_pretty(&sort_json(json!({ "files": files }))).unwrap()
        };
        let a = render(run_corpus());
        let b = render(run_corpus());
        if a != b {
            return Err("corpus runs differ byte for byte".into());
        }
        Ok(())
    })());
}
