//! Command-line front end: enumeration utilities, Schubert expansion, and
//! the verification suite, with JSON reports.
//!
//! The machine-readable report goes to standard output and a human summary
//! to standard error; `--format text` puts the human rendering on standard
//! output instead. For a fixed configuration the JSON output is
//! byte-identical across runs and thread counts; `--timings` adds
//! wall-clock seconds and is the one deliberate exception.
//!
//! Exit codes: 0 all requested checks pass, 1 verification failure,
//! 2 usage error, 3 cap exceeded without the matching opt-in flag.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use exflag::invariants::{self, OrbitSet};
use exflag::poly::Polynomial;
use exflag::presentations::{
    self, CheckOutcome, Dictionary, DuanZhao, Presentation, Status,
};
use exflag::report::{ExpansionReport, Report};
use exflag::root::RootSystem;
use exflag::{chow, schubert, weyl, GroupKind};

#[derive(Parser)]
#[command(
    name = "exflag",
    version,
    about = "Exact Schubert-calculus verification suite for the exceptional flag varieties"
)]
struct Cli {
    /// Optional key=value configuration file; command-line flags win.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Worker threads for the parallel sections (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Directory for enumeration and expansion caches.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Output format on standard output.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Include wall-clock seconds in the report. Timed output is not
    /// byte-identical across runs.
    #[arg(long, global = true)]
    timings: bool,

    /// Enable the degree-15 dictionary rows of E8 (the heaviest check).
    #[arg(long, global = true)]
    e8_gamma15: bool,

    /// Enable the E8 presentation relations above degree 15 (hours-scale).
    #[arg(long, global = true)]
    e8_rho18_plus: bool,

    /// Verify the stored E7 normalization column through degree 14
    /// (minutes-scale); without this the column is reported as stored.
    #[arg(long, global = true)]
    nj_e7: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the root system: simple roots, Cartan matrix, derived t-action.
    Roots {
        /// Group to operate on: e6, e7 or e8.
        #[arg(long)]
        group: Option<String>,
    },
    /// Enumerate Weyl group elements or minimal coset representatives.
    Weyl {
        #[arg(long)]
        group: Option<String>,
        /// Enumerate minimal representatives of the parabolic quotient
        /// obtained by excluding this 1-based node.
        #[arg(long)]
        coset: Option<usize>,
        /// Length bound for the enumeration.
        #[arg(long)]
        max_len: Option<u32>,
    },
    /// Expand a homogeneous polynomial in Schubert classes.
    Bgg {
        #[arg(long)]
        group: Option<String>,
        /// Polynomial in the weight coordinates w1..wl.
        #[arg(long)]
        input: String,
        /// Degree cap for the expansion.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Verify the generator dictionaries (forward and inverse tables).
    VerifyDictionary {
        #[arg(long)]
        group: Option<String>,
        /// Highest degree to check.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Verify the presentation relations via the kernel test.
    VerifyPresentation {
        #[arg(long)]
        group: Option<String>,
        /// Highest relation degree to check.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Verify the alternative free-ring presentation identities.
    VerifyDuanZhao {
        #[arg(long)]
        group: Option<String>,
        /// Highest identity degree to check.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Orbit invariants, closed forms, rewrite rows and the normalization
    /// table.
    InvariantsTable {
        #[arg(long)]
        group: Option<String>,
    },
    /// Derive the Chow ring: presentation, graded structure, isomorphism
    /// with the stated form, and the mod-p analysis.
    Chow {
        #[arg(long)]
        group: Option<String>,
        /// Restrict the mod-p analysis to one prime.
        #[arg(long)]
        mod_p: Option<u64>,
        /// Structure cap: highest degree of the graded-structure table.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Run every verification for one group with default caps.
    VerifyAll {
        #[arg(long)]
        group: Option<String>,
    },
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A terminal failure with its process exit code.
struct Failure {
    message: String,
    code: u8,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: 2,
    }
}

fn capped(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: 3,
    }
}

impl From<exflag::Error> for Failure {
    fn from(e: exflag::Error) -> Self {
        let code = match &e {
            exflag::Error::CapExceeded { .. } => 3,
            exflag::Error::Parse { .. } => 2,
            _ => 1,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

type ConfigMap = BTreeMap<String, String>;

const CONFIG_KEYS: &[&str] = &[
    "group",
    "format",
    "threads",
    "cache-dir",
    "timings",
    "cap",
    "coset",
    "max-len",
    "mod-p",
    "e8-gamma15",
    "e8-rho18-plus",
    "nj-e7",
];

fn load_config(path: &Path) -> Result<ConfigMap, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
    let mut map = ConfigMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(usage(format!(
                "config line {}: expected key=value, got {line:?}",
                lineno + 1
            )));
        };
        let key = key.trim();
        if !CONFIG_KEYS.contains(&key) {
            return Err(usage(format!(
                "config line {}: unknown key {key:?}",
                lineno + 1
            )));
        }
        map.insert(key.to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn config_parse<T: std::str::FromStr>(
    config: &ConfigMap,
    key: &str,
) -> Result<Option<T>, Failure> {
    match config.get(key) {
        None => Ok(None),
        Some(raw) => raw
            .parse::<T>()
            .map(Some)
            .map_err(|_| usage(format!("config key {key}: cannot parse value {raw:?}"))),
    }
}

fn config_bool(config: &ConfigMap, key: &str) -> Result<bool, Failure> {
    match config.get(key).map(String::as_str) {
        None => Ok(false),
        Some("true") | Some("1") | Some("yes") => Ok(true),
        Some("false") | Some("0") | Some("no") => Ok(false),
        Some(other) => Err(usage(format!(
            "config key {key}: expected a boolean, got {other:?}"
        ))),
    }
}

/// Effective run configuration after merging flags over the config file.
struct Settings {
    format: Format,
    timings: bool,
    cache_dir: Option<PathBuf>,
    e8_gamma15: bool,
    e8_rho18_plus: bool,
    nj_e7: bool,
    config: ConfigMap,
}

impl Settings {
    fn group(&self, flag: &Option<String>) -> Result<GroupKind, Failure> {
        let name = flag
            .clone()
            .or_else(|| self.config.get("group").cloned())
            .ok_or_else(|| usage("--group is required (e6, e7 or e8)"))?;
        GroupKind::parse(&name)
            .ok_or_else(|| usage(format!("unknown group {name:?}: expected e6, e7 or e8")))
    }

    fn cap(&self, flag: Option<u32>) -> Result<Option<u32>, Failure> {
        match flag {
            Some(c) => Ok(Some(c)),
            None => config_parse(&self.config, "cap"),
        }
    }

    fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let config = match &cli.config {
        Some(path) => load_config(path)?,
        None => ConfigMap::new(),
    };

    let threads = match cli.threads {
        Some(n) => Some(n),
        None => config_parse::<usize>(&config, "threads")?,
    };
    if let Some(n) = threads {
        if n == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        // A pool may already exist when run is called twice in-process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
        log::debug!("thread pool size {n}");
    }

    let format = match cli.format {
        Some(f) => f,
        None => match config.get("format").map(String::as_str) {
            None => Format::Json,
            Some("json") => Format::Json,
            Some("text") => Format::Text,
            Some(other) => {
                return Err(usage(format!(
                    "config key format: expected json or text, got {other:?}"
                )))
            }
        },
    };

    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| config.get("cache-dir").map(PathBuf::from));
    if let Some(dir) = &cache_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| usage(format!("cannot create cache dir {}: {e}", dir.display())))?;
    }

    let settings = Settings {
        format,
        timings: cli.timings || config_bool(&config, "timings")?,
        cache_dir,
        e8_gamma15: cli.e8_gamma15 || config_bool(&config, "e8-gamma15")?,
        e8_rho18_plus: cli.e8_rho18_plus || config_bool(&config, "e8-rho18-plus")?,
        nj_e7: cli.nj_e7 || config_bool(&config, "nj-e7")?,
        config,
    };

    let (payload, human, pass) = match &cli.command {
        Command::Roots { group } => roots_cmd(settings.group(group)?),
        Command::Weyl {
            group,
            coset,
            max_len,
        } => {
            let kind = settings.group(group)?;
            let coset = match coset {
                Some(c) => Some(*c),
                None => config_parse(&settings.config, "coset")?,
            };
            let max_len = match max_len {
                Some(m) => Some(*m),
                None => config_parse(&settings.config, "max-len")?,
            };
            weyl_cmd(kind, coset, max_len, settings.cache_dir())?
        }
        Command::Bgg { group, input, cap } => {
            let kind = settings.group(group)?;
            let cap = settings.cap(*cap)?;
            bgg_cmd(kind, input, cap, settings.cache_dir())?
        }
        Command::VerifyDictionary { group, cap } => {
            let kind = settings.group(group)?;
            let cap = settings.cap(*cap)?;
            dictionary_cmd(kind, cap, &settings)?
        }
        Command::VerifyPresentation { group, cap } => {
            let kind = settings.group(group)?;
            let cap = settings.cap(*cap)?;
            presentation_cmd(kind, cap, &settings)?
        }
        Command::VerifyDuanZhao { group, cap } => {
            let kind = settings.group(group)?;
            let cap = settings.cap(*cap)?;
            duan_zhao_cmd(kind, cap, &settings)?
        }
        Command::InvariantsTable { group } => {
            let kind = settings.group(group)?;
            invariants_cmd(kind, &settings)?
        }
        Command::Chow { group, mod_p, cap } => {
            let kind = settings.group(group)?;
            let mod_p = match mod_p {
                Some(p) => Some(*p),
                None => config_parse(&settings.config, "mod-p")?,
            };
            let cap = settings.cap(*cap)?;
            chow_cmd(kind, mod_p, cap, &settings)?
        }
        Command::VerifyAll { group } => {
            let kind = settings.group(group)?;
            verify_all_cmd(kind, &settings)?
        }
    };

    match settings.format {
        Format::Json => {
            let text =
                serde_json::to_string_pretty(&payload).expect("reports are serializable");
            println!("{text}");
            eprint!("{human}");
        }
        Format::Text => print!("{human}"),
    }
    Ok(pass)
}

fn report_result(report: Report) -> (Value, String, bool) {
    let human = report.render_text();
    let pass = report.all_pass();
    let value = serde_json::to_value(&report).expect("reports are serializable");
    (value, human, pass)
}

fn roots_cmd(kind: GroupKind) -> (Value, String, bool) {
    let rs = RootSystem::new(kind);
    let rank = rs.rank();
    let tfree = rs.tfree_ring();

    let simple_roots: Vec<Value> = (0..rank)
        .map(|i| {
            let omega = rs.simple_root_omega(i);
            let in_t = rs.omega_form_to_t(&rs.alpha_form(i));
            json!({
                "index": i + 1,
                "omega_coords": omega[..rank].to_vec(),
                "t_form": in_t.to_polynomial().to_string(),
            })
        })
        .collect();

    let cartan: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| rs.cartan(i, j)).collect())
        .collect();

    let t_action: Vec<Value> = (0..rank)
        .map(|i| match rs.t_transposition(i) {
            Some((a, b)) => json!({
                "reflection": i + 1,
                "kind": "transposition",
                "swaps": [tfree.name(a), tfree.name(b)],
            }),
            None => {
                let images: Vec<Value> = (0..tfree.nvars())
                    .map(|v| {
                        let var = Polynomial::var(tfree, v);
                        let image = rs.reflect_tfree(i, &var);
                        json!({ "from": tfree.name(v), "to": image.to_string() })
                    })
                    .collect();
                json!({
                    "reflection": i + 1,
                    "kind": "formula",
                    "images": images,
                })
            }
        })
        .collect();

    let payload = json!({
        "command": "roots",
        "group": kind.name(),
        "rank": rank,
        "positive_roots": rs.positive_roots().len(),
        "weyl_order": kind.weyl_order(),
        "invariant_degrees": kind.degrees(),
        "simple_roots": simple_roots,
        "cartan_matrix": cartan,
        "t_action": t_action,
    });

    let mut human = format!(
        "roots ({}): rank {rank}, {} positive roots, Weyl order {}\n",
        kind.name(),
        rs.positive_roots().len(),
        kind.weyl_order()
    );
    for i in 0..rank {
        let in_t = rs.omega_form_to_t(&rs.alpha_form(i));
        let action = match rs.t_transposition(i) {
            Some((a, b)) => format!("swaps {} and {}", tfree.name(a), tfree.name(b)),
            None => "acts by the derived formula".to_string(),
        };
        let _ = writeln!(
            human,
            "  alpha{} = {} ; s{} {}",
            i + 1,
            in_t.to_polynomial(),
            i + 1,
            action
        );
    }
    (payload, human, true)
}

fn weyl_cmd(
    kind: GroupKind,
    coset: Option<usize>,
    max_len: Option<u32>,
    cache_dir: Option<&Path>,
) -> Result<(Value, String, bool), Failure> {
    let rs = RootSystem::new(kind);
    if let Some(node) = coset {
        if node < 1 || node > rs.rank() {
            return Err(usage(format!(
                "--coset must name a node between 1 and {}",
                rs.rank()
            )));
        }
        let enumeration = match cache_dir {
            Some(dir) => weyl::cached_enumerate_coset(&rs, node, max_len, dir)?,
            None => weyl::enumerate_coset(&rs, node, max_len),
        };
        let counts = enumeration.counts();
        let words: Vec<Value> = enumeration
            .elements
            .iter()
            .map(|e| json!({ "word": e.word, "length": e.length }))
            .collect();
        let payload = json!({
            "command": "weyl",
            "group": kind.name(),
            "coset": node,
            "max_len": max_len,
            "total": enumeration.elements.len(),
            "counts": counts,
            "words": words,
        });

        let mut by_length: BTreeMap<u32, Vec<&str>> = BTreeMap::new();
        for e in &enumeration.elements {
            by_length.entry(e.length).or_default().push(&e.word);
        }
        let mut human = format!(
            "weyl ({}): {} minimal representatives, excluded node {node}\n",
            kind.name(),
            enumeration.elements.len()
        );
        for (length, words) in &by_length {
            let _ = writeln!(human, "  length {length}: {}", words.join(" "));
        }
        Ok((payload, human, true))
    } else {
        // Full-group counts. The element guard keeps an unbounded walk of
        // W(E8) (order ~7e8) from starting by accident.
        let guard = 10_000_000;
        let counts = weyl::count_by_length(&rs, max_len, guard).map_err(|e| match e {
            exflag::Error::CapExceeded { .. } => capped(format!(
                "full enumeration of W({}) exceeds the {guard}-element guard; \
                 pass --max-len or --coset",
                kind.name()
            )),
            other => Failure::from(other),
        })?;
        let total: u64 = counts.iter().sum();
        let payload = json!({
            "command": "weyl",
            "group": kind.name(),
            "max_len": max_len,
            "total": total,
            "counts": counts,
        });
        let mut human = format!("weyl ({}): {} elements\n", kind.name(), total);
        for (length, n) in counts.iter().enumerate() {
            let _ = writeln!(human, "  length {length}: {n}");
        }
        Ok((payload, human, true))
    }
}

fn bgg_cmd(
    kind: GroupKind,
    input: &str,
    cap: Option<u32>,
    cache_dir: Option<&Path>,
) -> Result<(Value, String, bool), Failure> {
    let rs = RootSystem::new(kind);
    let f = Polynomial::parse(rs.omega_ring(), input)
        .map_err(|e| usage(format!("cannot parse --input: {e}")))?;
    let cap = cap.unwrap_or_else(|| schubert::default_degree_cap(kind));
    let expansion = schubert::bgg_expand_cached(&rs, &f, cap, cache_dir)?;
    let report = ExpansionReport::new(input, &expansion);
    let payload = serde_json::to_value(&report).expect("reports are serializable");
    let human = format!("c({input}) = {}\n", expansion.display());
    Ok((payload, human, true))
}

fn dictionary_outcomes(
    kind: GroupKind,
    cap: Option<u32>,
    settings: &Settings,
) -> Result<Vec<CheckOutcome>, Failure> {
    let default = match kind {
        GroupKind::E6 => 12,
        GroupKind::E7 => 18,
        GroupKind::E8 => {
            if settings.e8_gamma15 {
                15
            } else {
                10
            }
        }
    };
    let cap = cap.unwrap_or(default);
    if kind == GroupKind::E8 && cap > 10 && !settings.e8_gamma15 {
        return Err(capped(
            "the E8 dictionary above degree 10 includes the degree-15 class; \
             pass --e8-gamma15 to enable it",
        ));
    }
    let rs = RootSystem::new(kind);
    let pres = Presentation::new(kind)?;
    let dict = Dictionary::new(kind, &pres)?;
    Ok(presentations::verify_dictionary(
        &rs,
        &pres,
        &dict,
        cap,
        settings.cache_dir(),
    )?)
}

fn dictionary_cmd(
    kind: GroupKind,
    cap: Option<u32>,
    settings: &Settings,
) -> Result<(Value, String, bool), Failure> {
    let outcomes = dictionary_outcomes(kind, cap, settings)?;
    Ok(report_result(Report::new(
        "verify-dictionary",
        Some(kind.name().to_string()),
        &outcomes,
        settings.timings,
    )))
}

fn presentation_cmd(
    kind: GroupKind,
    cap: Option<u32>,
    settings: &Settings,
) -> Result<(Value, String, bool), Failure> {
    let default = match kind {
        GroupKind::E6 => 12,
        GroupKind::E7 => 18,
        GroupKind::E8 => {
            if settings.e8_rho18_plus {
                30
            } else {
                15
            }
        }
    };
    let cap = cap.unwrap_or(default);
    if kind == GroupKind::E8 && cap > 15 && !settings.e8_rho18_plus {
        return Err(capped(
            "the E8 relations above degree 15 are hours-scale kernel runs; \
             pass --e8-rho18-plus to enable them",
        ));
    }
    let rs = RootSystem::new(kind);
    let pres = Presentation::new(kind)?;
    let outcomes = presentations::verify_relations(&rs, &pres, cap, settings.cache_dir())?;
    Ok(report_result(Report::new(
        "verify-presentation",
        Some(kind.name().to_string()),
        &outcomes,
        settings.timings,
    )))
}

fn duan_zhao_cmd(
    kind: GroupKind,
    cap: Option<u32>,
    settings: &Settings,
) -> Result<(Value, String, bool), Failure> {
    let default = match kind {
        GroupKind::E6 => 12,
        GroupKind::E7 => 18,
        GroupKind::E8 => 10,
    };
    let cap = cap.unwrap_or(default);
    let rs = RootSystem::new(kind);
    let pres = Presentation::new(kind)?;
    let dz = DuanZhao::new(kind, &pres)?;
    let outcomes = presentations::verify_duan_zhao(&rs, &pres, &dz, cap, settings.cache_dir())?;
    Ok(report_result(Report::new(
        "verify-duan-zhao",
        Some(kind.name().to_string()),
        &outcomes,
        settings.timings,
    )))
}

/// Degrees swept by the invariance and closed-form checks.
fn sweep_degrees(kind: GroupKind) -> Vec<u32> {
    match kind {
        GroupKind::E6 => vec![2, 5, 6, 8, 9, 12],
        GroupKind::E7 => (1..=9).map(|k| 2 * k).collect(),
        GroupKind::E8 => (1..=7).map(|k| 2 * k).collect(),
    }
}

fn invariants_outcomes(
    kind: GroupKind,
    settings: &Settings,
) -> Result<Vec<CheckOutcome>, Failure> {
    let rs = RootSystem::new(kind);
    let orbit = OrbitSet::new(&rs);
    let pres = Presentation::new(kind)?;
    let sweep = sweep_degrees(kind);
    let newton_upto = *sweep.iter().max().expect("sweep is nonempty");

    let mut outcomes = invariants::orbit_outcomes(&rs, &orbit);
    outcomes.extend(invariants::invariance_outcomes(&rs, &orbit, &sweep));
    outcomes.extend(invariants::closed_form_outcomes(&rs, &orbit, &sweep));
    outcomes.extend(invariants::newton_outcomes(&rs, &orbit, newton_upto));
    outcomes.extend(invariants::rewrite_outcomes(&rs, &orbit, 8)?);
    let nj_max = match kind {
        GroupKind::E6 => 12,
        GroupKind::E7 => {
            if settings.nj_e7 {
                14
            } else {
                0
            }
        }
        GroupKind::E8 => 0,
    };
    outcomes.extend(invariants::nj_outcomes(&rs, &pres, &orbit, nj_max)?);
    Ok(outcomes)
}

fn invariants_cmd(
    kind: GroupKind,
    settings: &Settings,
) -> Result<(Value, String, bool), Failure> {
    let outcomes = invariants_outcomes(kind, settings)?;
    let report = Report::new(
        "invariants-table",
        Some(kind.name().to_string()),
        &outcomes,
        settings.timings,
    );

    // The stored normalization column, one row per basic degree.
    let table: Vec<Value> = invariants::nj_table(kind)
        .iter()
        .map(|&(j, _, _)| {
            let value = invariants::nj_value(kind, j).expect("table degree");
            json!({ "degree": j, "value": value.to_string() })
        })
        .collect();

    let mut payload = serde_json::to_value(&report).expect("reports are serializable");
    payload["normalization_table"] = Value::Array(table);

    let mut human = report.render_text();
    let _ = writeln!(human, "  normalization column ({}):", kind.name());
    for &(j, _, _) in invariants::nj_table(kind) {
        let value = invariants::nj_value(kind, j).expect("table degree");
        let _ = writeln!(human, "    n_{j} = {value}");
    }
    let pass = report.all_pass();
    Ok((payload, human, pass))
}

fn is_small_prime(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn chow_sections(
    kind: GroupKind,
    mod_p: Option<u64>,
    cap: Option<u32>,
) -> Result<(Value, String, Vec<CheckOutcome>), Failure> {
    let derivation = chow::derive_chow(kind)?;
    derivation.replay()?;
    let derived = &derivation.presentation;
    let canonical = chow::canonical_chow(kind);
    let gen_map = chow::canonical_generator_map(&canonical, derived)?;

    let struct_default = match kind {
        GroupKind::E6 => 24,
        GroupKind::E7 => 40,
        GroupKind::E8 => 60,
    };
    let iso_default = match kind {
        GroupKind::E6 => 24,
        GroupKind::E7 => 40,
        GroupKind::E8 => 30,
    };
    let struct_cap = cap.unwrap_or(struct_default);
    let iso_cap = struct_cap.min(iso_default);

    let mut outcomes = vec![CheckOutcome::new("derivation:replay", 0, Status::Pass)];
    outcomes.extend(chow::verify_isomorphism(
        &canonical, derived, &gen_map, iso_cap,
    )?);

    let structure = chow::graded_structure(derived, struct_cap);

    let primes: Vec<u64> = match mod_p {
        Some(p) => {
            if !is_small_prime(p) {
                return Err(usage(format!("--mod-p expects a prime, got {p}")));
            }
            vec![p]
        }
        None => chow::stated_mod_p_rows()
            .iter()
            .filter(|(k, _, _, _)| *k == kind)
            .map(|&(_, p, _, _)| p)
            .collect(),
    };
    let mut mod_p_values = Vec::new();
    let mut mod_p_human = String::new();
    for &p in &primes {
        let analysis = chow::mod_p_analysis(kind, p)?;
        let status = match analysis.table_match {
            Some(true) | None if analysis.anomalies.is_empty() => Status::Pass,
            _ => Status::Fail,
        };
        let mut outcome = CheckOutcome::new(format!("mod-p:{p}"), 0, status);
        if !analysis.anomalies.is_empty() {
            outcome = outcome.with_detail(analysis.anomalies.join("; "));
        }
        outcomes.push(outcome);

        let normal_form: Vec<Value> = analysis
            .normal_form
            .iter()
            .map(|(name, degree, exponent)| {
                json!({ "generator": name, "degree": degree, "exponent": exponent })
            })
            .collect();
        mod_p_values.push(json!({
            "p": p,
            "eliminated": analysis
                .eliminated
                .iter()
                .map(|(name, image)| json!({ "generator": name, "image": image.to_string() }))
                .collect::<Vec<_>>(),
            "normal_form": normal_form,
            "anomalies": analysis.anomalies,
            "exceptional_degrees": analysis.exceptional_degrees,
            "generator_degrees": analysis.ip_generator_degrees,
            "table_match": analysis.table_match,
        }));

        let formals: Vec<String> = analysis
            .normal_form
            .iter()
            .map(|(name, _, exponent)| format!("{name}^{exponent}"))
            .collect();
        let _ = writeln!(
            mod_p_human,
            "  mod {p}: truncation {}; exceptional degrees {:?}; generator degrees {:?}",
            formals.join(", "),
            analysis.exceptional_degrees,
            analysis.ip_generator_degrees,
        );
    }

    let relations: Vec<Value> = derived
        .relations
        .iter()
        .map(|rel| json!({ "name": rel.name, "degree": rel.degree, "poly": rel.poly.to_string() }))
        .collect();
    let log: Vec<Value> = derivation
        .log
        .iter()
        .map(|entry| {
            json!({
                "name": entry.name,
                "raw": entry.raw.to_string(),
                "steps": entry.steps.len(),
                "negated": entry.negated,
                "reduced": entry.reduced.to_string(),
            })
        })
        .collect();
    let structure_rows: Vec<Value> = structure
        .iter()
        .map(|row| {
            json!({
                "degree": row.degree,
                "rank": row.free_rank(),
                "torsion": row.torsion.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "group": row.describe(),
            })
        })
        .collect();

    let payload = json!({
        "command": "chow",
        "group": kind.name(),
        "structure_cap": struct_cap,
        "isomorphism_cap": iso_cap,
        "generators": derived
            .generators()
            .iter()
            .map(|(name, degree)| json!({ "name": name, "degree": degree }))
            .collect::<Vec<_>>(),
        "relations": relations,
        "derivation_log": log,
        "structure": structure_rows,
        "mod_p": mod_p_values,
    });

    let mut human = format!(
        "chow ({}): {} generators, {} relations\n",
        kind.name(),
        derived.generators().len(),
        derived.relations.len()
    );
    for rel in &derived.relations {
        let _ = writeln!(human, "  {} (degree {}): {}", rel.name, rel.degree, rel.poly);
    }
    let _ = writeln!(human, "  graded structure up to degree {struct_cap}:");
    for row in &structure {
        if row.degree > 0 && (row.free_rank() > 0 || !row.torsion.is_empty()) {
            let _ = writeln!(human, "    degree {}: {}", row.degree, row.describe());
        }
    }
    human.push_str(&mod_p_human);

    Ok((payload, human, outcomes))
}

fn chow_cmd(
    kind: GroupKind,
    mod_p: Option<u64>,
    cap: Option<u32>,
    settings: &Settings,
) -> Result<(Value, String, bool), Failure> {
    let (mut payload, mut human, outcomes) = chow_sections(kind, mod_p, cap)?;
    let report = Report::new(
        "chow",
        Some(kind.name().to_string()),
        &outcomes,
        settings.timings,
    );
    payload["items"] = serde_json::to_value(&report.items).expect("serializable");
    payload["summary"] = serde_json::to_value(report.summary).expect("serializable");
    human.push_str(&report.render_text());
    let pass = report.all_pass();
    Ok((payload, human, pass))
}

fn verify_all_cmd(
    kind: GroupKind,
    settings: &Settings,
) -> Result<(Value, String, bool), Failure> {
    let mut sections: Vec<(String, Report, Option<Value>)> = Vec::new();

    let outcomes = dictionary_outcomes(kind, None, settings)?;
    sections.push((
        "dictionary".to_string(),
        Report::new(
            "verify-dictionary",
            Some(kind.name().to_string()),
            &outcomes,
            settings.timings,
        ),
        None,
    ));

    let rs = RootSystem::new(kind);
    let pres = Presentation::new(kind)?;

    let relation_cap = match kind {
        GroupKind::E6 => 12,
        GroupKind::E7 => 18,
        GroupKind::E8 => {
            if settings.e8_rho18_plus {
                30
            } else {
                15
            }
        }
    };
    let outcomes =
        presentations::verify_relations(&rs, &pres, relation_cap, settings.cache_dir())?;
    sections.push((
        "presentation".to_string(),
        Report::new(
            "verify-presentation",
            Some(kind.name().to_string()),
            &outcomes,
            settings.timings,
        ),
        None,
    ));

    let dz = DuanZhao::new(kind, &pres)?;
    let dz_cap = match kind {
        GroupKind::E6 => 12,
        GroupKind::E7 => 18,
        GroupKind::E8 => 10,
    };
    let outcomes =
        presentations::verify_duan_zhao(&rs, &pres, &dz, dz_cap, settings.cache_dir())?;
    sections.push((
        "duan-zhao".to_string(),
        Report::new(
            "verify-duan-zhao",
            Some(kind.name().to_string()),
            &outcomes,
            settings.timings,
        ),
        None,
    ));

    let outcomes = invariants_outcomes(kind, settings)?;
    sections.push((
        "invariants".to_string(),
        Report::new(
            "invariants-table",
            Some(kind.name().to_string()),
            &outcomes,
            settings.timings,
        ),
        None,
    ));

    let (chow_payload, _, outcomes) = chow_sections(kind, None, None)?;
    sections.push((
        "chow".to_string(),
        Report::new(
            "chow",
            Some(kind.name().to_string()),
            &outcomes,
            settings.timings,
        ),
        Some(chow_payload),
    ));

    let mut human = format!("verify-all ({})\n", kind.name());
    let mut pass = true;
    let mut section_values = Vec::new();
    let mut totals = (0usize, 0usize, 0usize, 0usize);
    for (name, report, extra) in &sections {
        pass &= report.all_pass();
        totals.0 += report.summary.total;
        totals.1 += report.summary.passed;
        totals.2 += report.summary.failed;
        totals.3 += report.summary.skipped;
        human.push_str(&report.render_text());
        let mut value = serde_json::to_value(report).expect("serializable");
        value["section"] = Value::String(name.clone());
        if let Some(extra) = extra {
            value["detail"] = extra.clone();
        }
        section_values.push(value);
    }
    let _ = writeln!(
        human,
        "verify-all: {} checks, {} passed, {} failed, {} skipped",
        totals.0, totals.1, totals.2, totals.3
    );

    let payload = json!({
        "command": "verify-all",
        "group": kind.name(),
        "sections": section_values,
        "summary": {
            "total": totals.0,
            "passed": totals.1,
            "failed": totals.2,
            "skipped": totals.3,
        },
    });
    Ok((payload, human, pass))
}
