//! Command-line front end: field inspection, construction emission,
//! mapping tables, the invariant suite, and census runs with caching.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::census;
use crate::constructions::{construct_c1, construct_c2, construct_c3, construct_c4};
use crate::display::fmt_element;
use crate::error::Error;
use crate::gf_base::BaseField;
use crate::gf_ext::{ExtElement, ExtField};
use crate::moebius::{phi, psi};
use crate::paley::{PaleyGraph, SetKind};
use crate::verify::run_suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(name = "paley-square", version, about = "Maximal cliques in Paley graphs of square order")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    C1,
    C2,
    Q0,
    Q1,
    Aq0,
    Aq1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    Phi,
    Psi,
}

#[derive(Subcommand)]
enum Command {
    /// Print field parameters and canonical choices
    Field {
        #[arg(long)]
        q: u64,
        /// Override the defining non-square d (canonical element index)
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Emit one of the construction sets
    Construct {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Emit a (preimage, image) table for phi or psi on a circle set
    Map {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, value_enum)]
        map: MapName,
        /// One of q0, q1, aq0, aq1, optionally with `+0` adjoined
        #[arg(long)]
        source: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run the invariant suite for one q or a range
    Verify {
        #[arg(long, conflicts_with = "q_range")]
        q: Option<u64>,
        /// Inclusive range like 3..31; non-prime-powers are skipped
        #[arg(long)]
        q_range: Option<String>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enumerate and classify the target-size maximal cliques
    Census {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: Option<u32>,
        /// Time budget in seconds
        #[arg(long, default_value_t = 600)]
        budget: u64,
        /// Worker threads; 0 means all cores
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Recompute even if a cache file exists
        #[arg(long)]
        refresh: bool,
        /// Cache directory (env override CACHE_DIR, default census-cache)
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

/// One emitted record; emitting then re-parsing yields an identical value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub q: u32,
    pub p: u32,
    pub e: u32,
    pub d: u32,
    pub irreducible: Vec<u32>,
    pub beta: [u32; 2],
    pub command: String,
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Field {
        generator: u32,
        square_count: u32,
        ext_square_count: u64,
    },
    Set {
        id: String,
        set_kind: String,
        size: usize,
        maximal: bool,
        elements: Vec<[u32; 2]>,
        display: Vec<String>,
    },
    MapTable {
        map: String,
        source: String,
        rows: Vec<MapRow>,
    },
    Census {
        target_size: usize,
        clique_count: usize,
        orbit_count: usize,
        orbits: Vec<CensusOrbit>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapRow {
    pub preimage: [u32; 2],
    pub image: [u32; 2],
    pub preimage_display: String,
    pub image_display: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusOrbit {
    pub family: census::Family,
    pub clique_count: usize,
    pub representative: Vec<[u32; 2]>,
    pub display: Vec<String>,
}

fn make_field(q: u64, d: Option<u32>) -> Result<ExtField, Error> {
    let base = BaseField::new(q)?;
    let d = d.map(|i| {
        if i >= base.q() {
            return Err(Error::DIsASquare);
        }
        Ok(base.element(i))
    });
    let d = match d {
        Some(r) => Some(r?),
        None => None,
    };
    ExtField::new(base, d)
}

fn record(field: &ExtField, command: String, payload: Payload) -> OutputRecord {
    let base = field.base();
    OutputRecord {
        schema_version: 1,
        q: base.q(),
        p: base.p(),
        e: base.e(),
        d: field.d().index(),
        irreducible: base.irreducible().to_vec(),
        beta: [field.beta().x.index(), field.beta().y.index()],
        command,
        payload,
    }
}

fn pair(g: ExtElement) -> [u32; 2] {
    [g.x.index(), g.y.index()]
}

fn emit(rec: &OutputRecord, format: Format) {
    match format {
        Format::Structured => println!("{}", serde_json::to_string_pretty(rec).unwrap()),
        Format::Table => print_table(rec),
    }
}

fn print_table(rec: &OutputRecord) {
    println!(
        "# {} | q={} p={} e={} d={}",
        rec.command, rec.q, rec.p, rec.e, rec.d
    );
    match &rec.payload {
        Payload::Field {
            generator,
            square_count,
            ext_square_count,
        } => {
            let irr = rec
                .irreducible
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{c}*t^{i}"))
                .collect::<Vec<_>>()
                .join(" + ");
            println!("irreducible: {irr}");
            println!("generator: {generator}");
            println!("beta: ({},{})", rec.beta[0], rec.beta[1]);
            println!("base squares: {square_count}");
            println!("ext squares: {ext_square_count}");
        }
        Payload::Set {
            id,
            set_kind,
            size,
            maximal,
            display,
            ..
        } => {
            println!("{id}: kind={set_kind} size={size} maximal={maximal}");
            for line in display {
                println!("{line}");
            }
        }
        Payload::MapTable { map, source, rows } => {
            println!("{map}({source})");
            for row in rows {
                println!("{} -> {}", row.preimage_display, row.image_display);
            }
        }
        Payload::Census {
            target_size,
            clique_count,
            orbit_count,
            orbits,
        } => {
            println!(
                "target_size={target_size} clique_count={clique_count} orbit_count={orbit_count}"
            );
            for o in orbits {
                println!(
                    "orbit family={} count={} rep={}",
                    o.family.as_str(),
                    o.clique_count,
                    o.display.join(", ")
                );
            }
        }
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn sorted_display(field: &ExtField, elements: &[ExtElement]) -> Vec<String> {
    let mut sorted = elements.to_vec();
    sorted.sort();
    sorted.iter().map(|&g| fmt_element(field, g)).collect()
}

fn cmd_field(q: u64, d: Option<u32>, format: Format) -> i32 {
    let field = match make_field(q, d) {
        Ok(f) => f,
        Err(e) => return usage_error(&e.to_string()),
    };
    let base = field.base();
    let payload = Payload::Field {
        generator: base.generator().index(),
        square_count: (base.q() - 1) / 2,
        ext_square_count: (field.order() - 1) / 2,
    };
    emit(&record(&field, format!("field --q {q}"), payload), format);
    EXIT_OK
}

fn construction_payload(field: &ExtField, which: Which) -> Payload {
    let result = match which {
        Which::C1 => construct_c1(field),
        Which::C2 => construct_c2(field),
        Which::Q0 => construct_c3(field).0,
        Which::Q1 => construct_c3(field).1,
        Which::Aq0 => construct_c4(field).0,
        Which::Aq1 => construct_c4(field).1,
    };
    let kind = match result.set.kind {
        SetKind::Clique => "clique",
        SetKind::Independent => "independent",
        SetKind::Neither => "neither",
    };
    Payload::Set {
        id: format!("{:?}", result.id).to_lowercase(),
        set_kind: kind.to_string(),
        size: result.set.elements.len(),
        maximal: result.certificate.maximal,
        elements: result.set.elements.iter().map(|&g| pair(g)).collect(),
        display: sorted_display(field, &result.set.elements),
    }
}

fn cmd_construct(q: u64, d: Option<u32>, which: Which, format: Format) -> i32 {
    let field = match make_field(q, d) {
        Ok(f) => f,
        Err(e) => return usage_error(&e.to_string()),
    };
    let payload = construction_payload(&field, which);
    emit(&record(&field, format!("construct --q {q}"), payload), format);
    EXIT_OK
}

/// Source sets for the map tables: the raw circle halves and their alpha
/// multiples, with an optional adjoined zero.
fn map_source(field: &ExtField, source: &str) -> Option<Vec<ExtElement>> {
    let (base_name, adjoin_zero) = match source.strip_suffix("+0") {
        Some(rest) => (rest, true),
        None => (source, false),
    };
    let circle = field.circle_subgroups();
    let alpha = field.alpha();
    let mut set = match base_name {
        "q0" => circle.q0,
        "q1" => circle.q1,
        "aq0" => circle.q0.iter().map(|&g| field.mul(alpha, g)).collect(),
        "aq1" => circle.q1.iter().map(|&g| field.mul(alpha, g)).collect(),
        _ => return None,
    };
    if adjoin_zero {
        set.push(field.zero());
    }
    Some(set)
}

/// Rows sorted by image: alpha-major for phi (whose images lie on the
/// alpha line), constant-major for psi.
pub(crate) fn map_rows(
    field: &ExtField,
    map: fn(&ExtField, ExtElement) -> ExtElement,
    alpha_major: bool,
    source: &[ExtElement],
) -> Vec<(ExtElement, ExtElement)> {
    let base = field.base();
    let mut rows: Vec<(ExtElement, ExtElement)> = source
        .iter()
        .map(|&g| (g, map(field, g)))
        .collect();
    rows.sort_by_key(|&(_, img)| {
        let (sx, sy) = (base.symmetric_int(img.x), base.symmetric_int(img.y));
        if alpha_major {
            (-sy, -sx)
        } else {
            (-sx, -sy)
        }
    });
    rows
}

fn cmd_map(q: u64, d: Option<u32>, map: MapName, source: &str, format: Format) -> i32 {
    let field = match make_field(q, d) {
        Ok(f) => f,
        Err(e) => return usage_error(&e.to_string()),
    };
    let Some(src) = map_source(&field, source) else {
        return usage_error(&format!("unknown source `{source}`"));
    };
    let (func, alpha_major, name): (fn(&ExtField, ExtElement) -> ExtElement, bool, &str) =
        match map {
            MapName::Phi => (phi, true, "phi"),
            MapName::Psi => (psi, false, "psi"),
        };
    let rows = map_rows(&field, func, alpha_major, &src)
        .into_iter()
        .map(|(pre, img)| MapRow {
            preimage: pair(pre),
            image: pair(img),
            preimage_display: fmt_element(&field, pre),
            image_display: fmt_element(&field, img),
        })
        .collect();
    let payload = Payload::MapTable {
        map: name.to_string(),
        source: source.to_string(),
        rows,
    };
    emit(&record(&field, format!("map --q {q}"), payload), format);
    EXIT_OK
}

fn parse_range(spec: &str) -> Option<(u64, u64)> {
    let (lo, hi) = spec.split_once("..")?;
    Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?))
}

fn cmd_verify(q: Option<u64>, q_range: Option<String>, d: Option<u32>, seed: u64) -> i32 {
    let qs: Vec<u64> = match (q, q_range) {
        (Some(q), None) => vec![q],
        (None, Some(spec)) => {
            let Some((lo, hi)) = parse_range(&spec) else {
                return usage_error("q-range must look like 3..31");
            };
            (lo..=hi).filter(|&q| BaseField::new(q).is_ok()).collect()
        }
        _ => return usage_error("pass exactly one of --q or --q-range"),
    };
    if qs.is_empty() {
        return usage_error("no valid odd prime powers in range");
    }
    let mut all_ok = true;
    for q in qs {
        match run_suite(q, d, seed) {
            Ok(outcomes) => {
                for c in &outcomes {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    match &c.detail {
                        Some(detail) if !c.passed => {
                            println!("q={q} {status} {} ({detail})", c.name)
                        }
                        _ => println!("q={q} {status} {}", c.name),
                    }
                    all_ok &= c.passed;
                }
            }
            Err(e) => return usage_error(&format!("q={q}: {e}")),
        }
    }
    if all_ok {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn census_cache_dir(cache_dir: Option<PathBuf>) -> PathBuf {
    cache_dir
        .or_else(|| std::env::var_os("CACHE_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("census-cache"))
}

fn census_payload(result: &census::CensusResult, field: &ExtField) -> Payload {
    Payload::Census {
        target_size: result.target_size,
        clique_count: result.clique_count,
        orbit_count: result.orbit_count(),
        orbits: result
            .orbits
            .iter()
            .map(|o| CensusOrbit {
                family: o.family,
                clique_count: o.clique_count,
                representative: o.representative.iter().map(|&g| pair(g)).collect(),
                display: o
                    .representative
                    .iter()
                    .map(|&g| fmt_element(field, g))
                    .collect(),
            })
            .collect(),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_census(
    q: u64,
    d: Option<u32>,
    budget: u64,
    jobs: usize,
    refresh: bool,
    cache_dir: Option<PathBuf>,
    format: Format,
) -> i32 {
    let field = match make_field(q, d) {
        Ok(f) => f,
        Err(e) => return usage_error(&e.to_string()),
    };
    let dir = census_cache_dir(cache_dir);
    let path = dir.join(format!("census-q{}-d{}.v1", field.q(), field.d().index()));

    let result = if !refresh && path.exists() {
        match std::fs::read_to_string(&path)
            .map_err(Error::from)
            .and_then(|text| census::from_cache_text(&field, &text))
        {
            Ok(r) => r,
            Err(e) => return usage_error(&format!("cache {}: {e}", path.display())),
        }
    } else {
        let deadline = Instant::now() + Duration::from_secs(budget);
        let graph = PaleyGraph::new(&field);
        let run = || census::classify(&graph, Some(deadline));
        let computed = if jobs > 0 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool");
            pool.install(run)
        } else {
            run()
        };
        match computed {
            Ok(r) => {
                if let Err(e) = std::fs::create_dir_all(&dir)
                    .map_err(Error::from)
                    .and_then(|_| {
                        std::fs::write(&path, census::to_cache_text(&r)).map_err(Error::from)
                    })
                {
                    eprintln!("warning: could not write cache: {e}");
                }
                r
            }
            Err(Error::BudgetExhausted) => {
                eprintln!("error: census budget of {budget}s exhausted (partial results discarded)");
                return EXIT_BUDGET;
            }
            Err(e) => return usage_error(&e.to_string()),
        }
    };
    emit(
        &record(&field, format!("census --q {q}"), census_payload(&result, &field)),
        format,
    );
    EXIT_OK
}

/// Parses argv and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Field { q, d, format } => cmd_field(q, d, format),
        Command::Construct { q, d, which, format } => cmd_construct(q, d, which, format),
        Command::Map {
            q,
            d,
            map,
            source,
            format,
        } => cmd_map(q, d, map, &source, format),
        Command::Verify {
            q,
            q_range,
            d,
            seed,
        } => cmd_verify(q, q_range, d, seed),
        Command::Census {
            q,
            d,
            budget,
            jobs,
            refresh,
            cache_dir,
            format,
        } => cmd_census(q, d, budget, jobs, refresh, cache_dir, format),
    }
}
