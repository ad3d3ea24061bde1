use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use ample_core::ampleness::{
    dedekind_reduced, is_r_ample_with, is_r_conic, max_ampleness_with, max_conicity, min_vertices_for_ample,
    AmpleOptions, DEFAULT_AMPLE_CAP,
};
use ample_core::complex::{is_isomorphic, Format};
use ample_core::constructions::{
    barmak_tower, builtin, medial_sample, paley_complex, rado_tower, search_ample, sphere_join, BarmakOptions,
    ConstructionMetadata, PrimeFieldSpec, Tower, DEFAULT_TOWER_BUDGET,
};
use ample_core::experiments::{
    census_trend, empirical_dimension_and_betti, partition_experiment, resilience_experiment, CensusConfig,
    ExperimentReport, MedialStatsConfig, PartitionConfig, ResilienceConfig,
};
use ample_core::topology::{
    betti_numbers, betti_with_torsion, connectivity_report, medial_tc_calculator, tc_upper_bound, Field,
};
use ample_core::{Error, SimplicialComplex};

use crate::{
    CensusArgs, DedekindArgs, Expect, FieldArg, FillLoopArgs, FormatArg, Generator, Global, HomologyArgs, IsoArgs,
    IsoExpect, MedialStatsArgs, PartitionArgs, ResilienceArgs, TcArgs, Verdict, VerifyArgs,
};

/// Dedekind numbers past this r take minutes; `--force` lifts the cap.
const DEDEKIND_CAP: usize = 5;

fn emit(g: &Global, v: &Value) -> Result<()> {
    let s = if g.pretty { serde_json::to_string_pretty(v)? } else { serde_json::to_string(v)? };
    println!("{s}");
    Ok(())
}

fn seed(g: &Global) -> u64 {
    g.seed.unwrap_or(0)
}

fn config_echo<A: Serialize>(g: &Global, args: &A) -> Value {
    json!({ "global": { "seed": seed(g), "format": g.format, "output": g.output, "threads": g.threads, "force": g.force }, "args": args })
}

/// A builtin fixture name or a complex file in either canonical format.
fn load_complex(spec: &str) -> Result<SimplicialComplex> {
    if let Some(x) = builtin(spec) {
        return Ok(x);
    }
    let text = fs::read_to_string(spec).with_context(|| format!("reading complex {spec:?} (not a builtin name either)"))?;
    Ok(SimplicialComplex::parse_any(&text)?)
}

fn ample_options(g: &Global) -> AmpleOptions {
    AmpleOptions { force: g.force, ..AmpleOptions::default() }
}

fn format_of(g: &Global) -> Format {
    match g.format {
        FormatArg::Text => Format::Text,
        FormatArg::Structured => Format::Structured,
    }
}

fn summary(x: &SimplicialComplex) -> Value {
    json!({ "vertices": x.vertex_count(), "dim": x.dim(), "f_vector": x.f_vector() })
}

fn check_budget(g: &Global, budget: u64) -> Result<()> {
    if budget > DEFAULT_TOWER_BUDGET && !g.force {
        return Err(Error::ResourceLimit(format!("budget {budget} exceeds the default {DEFAULT_TOWER_BUDGET} (use --force)")).into());
    }
    Ok(())
}

fn tower_output(tower: Tower) -> (SimplicialComplex, Value) {
    let stages: Vec<Value> = tower
        .stages
        .iter()
        .map(|s| json!({ "stage": s.stage, "vertices": s.complex.vertex_count(), "f_vector": s.complex.f_vector() }))
        .collect();
    (tower.last().complex.clone(), json!(stages))
}

pub fn gen(g: &Global, generator: &Generator) -> Result<Verdict> {
    let (x, meta, extra) = match *generator {
        Generator::Paley { q, p, g: gen, max_dim } => {
            let spec = match gen {
                Some(gen) => PrimeFieldSpec::with_generator(q, p, gen),
                None => PrimeFieldSpec::new(q, p),
            };
            let (x, res) = paley_complex(&spec, max_dim)?;
            let mut meta = ConstructionMetadata::new("paley").param("q", q).param("p", p).param("max_dim", max_dim);
            meta.g = Some(res.g);
            (x, meta, json!({ "residues": res.members }))
        }
        Generator::Medial { n, max_dim } => {
            let s = medial_sample(n, seed(g), max_dim)?;
            let mut meta = ConstructionMetadata::new("medial").param("n", n).param("max_dim", max_dim);
            meta.seed = Some(seed(g));
            (s.complex, meta, json!({ "h": s.h }))
        }
        Generator::Search { n, r, trials } => {
            let out = search_ample(n, r, trials, seed(g), &ample_options(g))?;
            let mut meta = ConstructionMetadata::new("search").param("n", n).param("r", r).param("trials", trials);
            meta.seed = Some(seed(g));
            let extra = json!({ "found_at": out.found_at, "trials_used": out.trials_used });
            match out.complex {
                Some(x) => (x, meta, extra),
                None => {
                    emit(g, &json!({ "command": "gen", "config": config_echo(g, generator), "metadata": meta, "found": false, "search": extra }))?;
                    return Ok(Verdict::Negative);
                }
            }
        }
        Generator::Rado { levels, budget } => {
            check_budget(g, budget)?;
            let tower = rado_tower(levels, budget)?;
            let mut meta = ConstructionMetadata::new("rado").param("levels", levels).param("budget", budget);
            meta.budget_status = Some(tower.status.clone());
            let (x, stages) = tower_output(tower);
            (x, meta, json!({ "stages": stages }))
        }
        Generator::Barmak { n, iterations, budget, include_empty } => {
            check_budget(g, budget)?;
            let tower = barmak_tower(n, iterations, budget, BarmakOptions { include_empty })?;
            let mut meta = ConstructionMetadata::new("barmak")
                .param("n", n)
                .param("iterations", iterations)
                .param("budget", budget)
                .param("include_empty", include_empty);
            meta.budget_status = Some(tower.status.clone());
            let (x, stages) = tower_output(tower);
            (x, meta, json!({ "stages": stages }))
        }
        Generator::SphereJoin { k } => (sphere_join(k)?, ConstructionMetadata::new("sphere-join").param("k", k), json!({})),
        Generator::Builtin { ref name } => {
            let x = builtin(name).with_context(|| format!("unknown builtin {name:?}"))?;
            (x, ConstructionMetadata::new("builtin").param("name", name), json!({}))
        }
    };
    let mut out = json!({
        "command": "gen",
        "config": config_echo(g, generator),
        "metadata": meta,
        "details": extra,
        "summary": summary(&x),
    });
    match &g.output {
        Some(path) => {
            fs::write(path, x.serialize_as(format_of(g))).with_context(|| format!("writing {}", path.display()))?;
            let meta_path = sidecar(path, "meta.json");
            fs::write(&meta_path, serde_json::to_string_pretty(&out)?)?;
            out["files"] = json!({ "complex": path, "metadata": meta_path });
        }
        None => out["complex"] = serde_json::to_value(&x)?,
    }
    emit(g, &out)?;
    Ok(Verdict::Ok)
}

fn sidecar(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(suffix);
    PathBuf::from(s)
}

pub fn verify(g: &Global, a: &VerifyArgs) -> Result<Verdict> {
    if a.ample.is_none() && a.conic.is_none() && a.max.is_none() {
        bail!("nothing to verify: pass --ample, --conic or --max");
    }
    let x = load_complex(&a.complex)?;
    let opts = AmpleOptions { witness_table: a.witness_table, ..ample_options(g) };
    let mut out = json!({ "command": "verify", "config": config_echo(g, a), "summary": summary(&x) });
    let ample = a.ample.map(|r| is_r_ample_with(&x, r, &opts)).transpose()?;
    let conic = a.conic.map(|r| is_r_conic(&x, r));
    if let Some(v) = &ample {
        out["ample"] = serde_json::to_value(v)?;
    }
    if let Some(v) = &conic {
        out["conic"] = serde_json::to_value(v)?;
    }
    if let Some(cap) = a.max {
        out["max_ampleness"] = json!(max_ampleness_with(&x, cap.min(if g.force { cap } else { DEFAULT_AMPLE_CAP }), &opts)?);
        out["max_conicity"] = json!(max_conicity(&x, cap));
    }
    let verdict = match a.expect {
        None => Verdict::Ok,
        Some(e) => {
            let met = match e {
                Expect::Ample => ample.as_ref().map(|v| v.is_ample()),
                Expect::NotAmple => ample.as_ref().map(|v| !v.is_ample()),
                Expect::Conic => conic.as_ref().map(|v| v.is_conic()),
                Expect::NotConic => conic.as_ref().map(|v| !v.is_conic()),
            };
            match met {
                None => bail!("--expect {e:?} needs the matching --ample or --conic"),
                Some(true) => Verdict::Ok,
                Some(false) => Verdict::Negative,
            }
        }
    };
    out["expectation_met"] = json!(matches!(verdict, Verdict::Ok));
    emit(g, &out)?;
    Ok(verdict)
}

pub fn homology(g: &Global, a: &HomologyArgs) -> Result<Verdict> {
    let x = load_complex(&a.complex)?;
    let fields: Vec<Field> = match a.field {
        FieldArg::Gf2 => vec![Field::Gf2],
        FieldArg::Rational => vec![Field::Rational],
        FieldArg::Both => vec![Field::Gf2, Field::Rational],
    };
    let mut reports = Vec::new();
    for f in fields {
        let rep = if a.torsion { betti_with_torsion(&x, f)? } else { betti_numbers(&x, f) };
        reports.push(json!({ "field": f, "betti": rep.betti, "reduced": rep.reduced(), "torsion": rep.torsion }));
    }
    let mut out = json!({ "command": "homology", "config": config_echo(g, a), "summary": summary(&x), "homology": reports });
    if a.connectivity {
        let verified = match a.ample {
            Some(r) if is_r_ample_with(&x, r, &ample_options(g))?.is_ample() => Some(r),
            Some(_) => {
                out["ample_verified"] = json!(false);
                None
            }
            None => None,
        };
        out["connectivity"] = serde_json::to_value(connectivity_report(&x, verified))?;
    }
    emit(g, &out)?;
    Ok(Verdict::Ok)
}

pub fn fill_loop(g: &Global, a: &FillLoopArgs) -> Result<Verdict> {
    let x = load_complex(&a.complex)?;
    let mut out = json!({ "command": "fill-loop", "config": config_echo(g, a) });
    match ample_core::topology::fill_loop(&x, &a.lp, a.r) {
        Ok(disc) => {
            let cert = disc.validate(&x)?;
            out["disc"] = serde_json::to_value(&disc)?;
            out["certificate"] = serde_json::to_value(cert)?;
            out["within_bounds"] = json!(disc.within_bounds());
            emit(g, &out)?;
            Ok(if disc.within_bounds() { Verdict::Ok } else { Verdict::Negative })
        }
        Err(Error::NotAmpleEnough { u, a }) => {
            out["missing_witness"] = json!({ "u": u, "a": a });
            emit(g, &out)?;
            Ok(Verdict::Negative)
        }
        Err(e) => Err(e.into()),
    }
}

fn load_config<T: DeserializeOwned + Default>(g: &Global) -> Result<T> {
    match &g.config {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
            serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
        }
        None => Ok(T::default()),
    }
}

fn set<T: Clone>(slot: &mut T, v: &Option<T>) {
    if let Some(v) = v {
        *slot = v.clone();
    }
}

/// Full report on stdout, or CSV at `-o` with the JSON report beside it and
/// a summary on stdout.
fn write_report<R: Serialize>(g: &Global, report: &ExperimentReport<R>) -> Result<()> {
    match &g.output {
        None => emit(g, &serde_json::to_value(report)?),
        Some(path) => {
            fs::write(path, report.to_csv()?).with_context(|| format!("writing {}", path.display()))?;
            let json_path = sidecar(path, "json");
            fs::write(&json_path, report.to_json(true)?)?;
            emit(
                g,
                &json!({
                    "experiment": report.experiment,
                    "exploratory": report.exploratory,
                    "config": report.config,
                    "summary": report.summary,
                    "files": { "table": path, "report": json_path },
                }),
            )
        }
    }
}

pub fn resilience(g: &Global, a: &ResilienceArgs) -> Result<Verdict> {
    let mut cfg: ResilienceConfig = load_config(g)?;
    set(&mut cfg.ns, &a.ns);
    set(&mut cfg.r, &a.r);
    set(&mut cfg.k, &a.k);
    set(&mut cfg.trials, &a.trials);
    set(&mut cfg.control_trials, &a.control_trials);
    set(&mut cfg.search_trials, &a.search_trials);
    set(&mut cfg.complexes_per_n, &a.complexes_per_n);
    set(&mut cfg.member_dims, &a.member_dims);
    set(&mut cfg.seed, &g.seed);
    cfg.force |= g.force;
    let report = resilience_experiment(&cfg)?;
    write_report(g, &report)?;
    let failed = report.summary.get("hypothesis_pass_rate").and_then(Value::as_f64).is_some_and(|r| r < 1.0);
    Ok(if failed { Verdict::Negative } else { Verdict::Ok })
}

pub fn census(g: &Global, a: &CensusArgs) -> Result<Verdict> {
    let mut cfg: CensusConfig = load_config(g)?;
    set(&mut cfg.ns, &a.ns);
    set(&mut cfg.trials, &a.trials);
    set(&mut cfg.u_size, &a.u_size);
    set(&mut cfg.seed, &g.seed);
    write_report(g, &census_trend(&cfg)?)?;
    Ok(Verdict::Ok)
}

pub fn partition(g: &Global, a: &PartitionArgs) -> Result<Verdict> {
    let x = load_complex(&a.complex)?;
    let mut cfg: PartitionConfig = load_config(g)?;
    set(&mut cfg.parts, &a.parts);
    set(&mut cfg.r, &a.r);
    set(&mut cfg.repeats, &a.repeats);
    set(&mut cfg.seed, &g.seed);
    cfg.force |= g.force;
    write_report(g, &partition_experiment(&x, &cfg)?)?;
    Ok(Verdict::Ok)
}

pub fn medial_stats(g: &Global, a: &MedialStatsArgs) -> Result<Verdict> {
    let mut cfg: MedialStatsConfig = load_config(g)?;
    set(&mut cfg.ns, &a.ns);
    set(&mut cfg.trials, &a.trials);
    set(&mut cfg.epsilon0, &a.epsilon0);
    set(&mut cfg.seed, &g.seed);
    write_report(g, &empirical_dimension_and_betti(&cfg)?)?;
    Ok(Verdict::Ok)
}

pub fn dedekind(g: &Global, a: &DedekindArgs) -> Result<Verdict> {
    if a.r > DEDEKIND_CAP && !g.force {
        return Err(Error::ResourceLimit(format!("r = {} exceeds {DEDEKIND_CAP} (use --force)", a.r)).into());
    }
    let value = dedekind_reduced(a.r)?;
    emit(
        g,
        &json!({
            "command": "dedekind",
            "config": config_echo(g, a),
            "r": a.r,
            "reduced_dedekind": value,
            "dedekind": value + 1,
            "min_vertices_for_ample": min_vertices_for_ample(a.r)?,
        }),
    )?;
    Ok(Verdict::Ok)
}

pub fn tc_bound(g: &Global, a: &TcArgs) -> Result<Verdict> {
    let mut out = json!({ "command": "tc-bound", "config": config_echo(g, a) });
    match (a.dim, a.conn, a.l) {
        (Some(dim), Some(conn), _) => out["tc_bound"] = json!(tc_upper_bound(dim, conn)),
        (_, _, Some(l)) => out["calculation"] = serde_json::to_value(medial_tc_calculator(l, a.epsilon0)?)?,
        _ => bail!("pass --dim and --conn, or --l"),
    }
    emit(g, &out)?;
    Ok(Verdict::Ok)
}

pub fn iso(g: &Global, a: &IsoArgs) -> Result<Verdict> {
    let x = load_complex(&a.a)?;
    let y = load_complex(&a.b)?;
    let map = is_isomorphic(&x, &y)?;
    let found = map.is_some();
    emit(g, &json!({ "command": "iso", "config": config_echo(g, a), "isomorphic": found, "map": map }))?;
    Ok(match a.expect {
        Some(IsoExpect::Isomorphic) if !found => Verdict::Negative,
        Some(IsoExpect::NotIsomorphic) if found => Verdict::Negative,
        _ => Verdict::Ok,
    })
}
