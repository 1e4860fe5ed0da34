// towerlrc - reproducible runner for the tower LRC constructions.
//
// Every run prints a one-line JSON summary to stdout as its last line; data
// goes to files named by flags. Runs with identical flags produce
// byte-identical output: field elements serialize as canonical indices,
// floats carry 12 significant digits, and all randomness comes from the
// seeded SplitMix64 stream.
//
// EXIT CODES:
//   0  success / all checks passed
//   1  a verification check failed (a claimed value was not reproduced)
//   2  usage error
//   3  budget exceeded

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use towerlrc::bounds::{
    figure_dataset, fmt_sig12, gv_b2_curve, write_bounds_csv, write_curve_csv, write_figure_svg,
    BoundCurve, BoundsError,
};
use towerlrc::checks::{run_suite, Check, CheckConfig, SuiteError};
use towerlrc::gf::{build_field, GfError};
use towerlrc::lrc::{
    dimension_rank, encode, exhaustive_min_distance, generator_matrix, write_generator_csv,
    CodeSpec, LrcError, DEFAULT_MESSAGE_BUDGET,
};
use towerlrc::recovery::{recover_erasure, recovery_sets, set_of_position};
use towerlrc::rng::SplitMix64;
use towerlrc::tower::{write_places_csv, Tower, TowerError, DEFAULT_PLACE_BUDGET};
use towerlrc::witness::{explore_conjecture, witness41, witness42, WitnessReport};
use towerlrc::Fe;

const DEFAULT_EXPLORE_BUDGET: u64 = 10_000;
const DEFAULT_RECOVER_TRIALS: u64 = 100;

fn usage() -> &'static str {
    "\
towerlrc - locally recoverable evaluation codes on a GF(q^2) function-field tower

USAGE:
  towerlrc <COMMAND> [OPTIONS]

COMMANDS:
  field               Report the canonical GF(q^2) construction for q
  places              Enumerate the level-i places and write them as CSV
  code                Build the generator matrix; write CSV, report parameters
  distance            Distance computations (designed | exhaustive | witness41 | witness42)
  recover             Seeded encode-erase-repair trials, one JSON record per trial
  verify              Run a claim suite (partitions | lemma | corollary | props | all)
  bounds              Rate/distance datasets and curves (points | curve), CSV/SVG
  explore-conjecture  Search products of linear factors for many zeros (level >= 3)

OPTIONS:
  --q N          odd prime in 3..=31 (required by every command)
  --level N      tower level i
  --l N          pole order l
  --mode M       distance: designed|exhaustive|witness41|witness42; bounds: points|curve
  --suite S      verify: partitions|lemma|corollary|props|all  (default all)
  --budget N     per-command budget: places/code/verify = max places,
                 distance exhaustive = max codewords, recover = trials,
                 explore-conjecture = candidate evaluations
  --seed N       SplitMix64 seed for all randomized trials (default 42)
  --threads N    worker threads for matrix construction and witness zero
                 counting (default 1; never affects results)
  --out PATH     primary output file (CSV / JSONL, per command)
  --svg PATH     SVG rendering of a bounds dataset
  --figure N     bounds presets: 2 (q=7, i=2..6) or 3 (q=17, i=2..3 plus curve)
  -h, --help     this text

EXAMPLES:
  towerlrc places --q 3 --level 1 --out places.csv
  towerlrc distance --q 5 --mode witness41
  towerlrc verify --q 5 --suite all
  towerlrc bounds --figure 2 --out fig2.csv --svg fig2.svg
  towerlrc recover --q 5 --level 2 --l 5 --budget 1000
"
}

enum CliError {
    Usage(String),
    CheckFailed(String),
    Budget(String),
    Runtime(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::CheckFailed(_) => 1,
            CliError::Budget(_) => 3,
            CliError::Runtime(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m)
            | CliError::CheckFailed(m)
            | CliError::Budget(m)
            | CliError::Runtime(m) => m,
        }
    }
}

impl From<GfError> for CliError {
    fn from(e: GfError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<TowerError> for CliError {
    fn from(e: TowerError) -> Self {
        match e {
            TowerError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

impl From<LrcError> for CliError {
    fn from(e: LrcError) -> Self {
        match e {
            LrcError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            LrcError::Tower(TowerError::BudgetExceeded { .. }) => CliError::Budget(e.to_string()),
            LrcError::ClaimMismatch { .. } | LrcError::WitnessConstruction(_) => {
                CliError::CheckFailed(e.to_string())
            }
            LrcError::InvalidSpec(_) => CliError::Usage(e.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

impl From<SuiteError> for CliError {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::Budget { .. } => CliError::Budget(e.to_string()),
            SuiteError::UnknownSuite(_) => CliError::Usage(e.to_string()),
            SuiteError::Internal(_) => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(format!("io: {e}"))
    }
}

#[derive(Default, Debug)]
struct Flags {
    q: Option<u32>,
    level: Option<usize>,
    l: Option<usize>,
    mode: Option<String>,
    suite: Option<String>,
    budget: Option<u64>,
    seed: Option<u64>,
    threads: Option<usize>,
    out: Option<PathBuf>,
    svg: Option<PathBuf>,
    figure: Option<u32>,
}

impl Flags {
    fn seed(&self) -> u64 {
        self.seed.unwrap_or(42)
    }

    fn threads(&self) -> usize {
        self.threads.unwrap_or(1)
    }

    fn require_q(&self) -> Result<u32, CliError> {
        self.q.ok_or_else(|| CliError::Usage("--q is required".into()))
    }

    fn require_level(&self) -> Result<usize, CliError> {
        self.level.ok_or_else(|| CliError::Usage("--level is required".into()))
    }

    fn require_l(&self) -> Result<usize, CliError> {
        self.l.ok_or_else(|| CliError::Usage("--l is required".into()))
    }
}

fn parse_flags(args: &[String]) -> Result<Flags, CliError> {
    let mut flags = Flags::default();
    let mut it = args.iter();
    while let Some(flag) = it.next() {
        let mut value = |name: &str| -> Result<&String, CliError> {
            it.next().ok_or_else(|| CliError::Usage(format!("{name} needs a value")))
        };
        match flag.as_str() {
            "--q" => flags.q = Some(parse_num(value("--q")?, "--q")?),
            "--level" => flags.level = Some(parse_num(value("--level")?, "--level")?),
            "--l" => flags.l = Some(parse_num(value("--l")?, "--l")?),
            "--mode" => flags.mode = Some(value("--mode")?.clone()),
            "--suite" => flags.suite = Some(value("--suite")?.clone()),
            "--budget" => flags.budget = Some(parse_num(value("--budget")?, "--budget")?),
            "--seed" => flags.seed = Some(parse_num(value("--seed")?, "--seed")?),
            "--threads" => {
                let t: usize = parse_num(value("--threads")?, "--threads")?;
                if t == 0 {
                    return Err(CliError::Usage("--threads must be at least 1".into()));
                }
                flags.threads = Some(t);
            }
            "--out" => flags.out = Some(PathBuf::from(value("--out")?)),
            "--svg" => flags.svg = Some(PathBuf::from(value("--svg")?)),
            "--figure" => flags.figure = Some(parse_num(value("--figure")?, "--figure")?),
            other => return Err(CliError::Usage(format!("unknown flag '{other}'"))),
        }
    }
    Ok(flags)
}

fn parse_num<T: std::str::FromStr>(s: &str, name: &str) -> Result<T, CliError> {
    s.parse().map_err(|_| CliError::Usage(format!("{name}: '{s}' is not a valid number")))
}

fn jesc(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn jopt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or("null".into(), |x| x.to_string())
}

fn jpath(p: &Option<PathBuf>) -> String {
    p.as_ref().map_or("null".into(), |p| jesc(&p.display().to_string()))
}

/// The code-parameter record used by `code` and `distance`.
#[allow(clippy::too_many_arguments)]
fn params_json(
    spec: &CodeSpec,
    k_rank: Option<usize>,
    d_exact: Option<usize>,
    d_witness: Option<usize>,
) -> String {
    format!(
        "{{\"q\":{},\"i\":{},\"l\":{},\"n\":{},\"k_formula\":{},\"k_rank\":{},\"d_designed\":{},\
         \"d_exact\":{},\"d_witness\":{},\"locality\":{}}}",
        spec.q(),
        spec.level(),
        spec.pole_order(),
        spec.n(),
        spec.k_formula(),
        jopt(k_rank),
        spec.designed_distance(),
        jopt(d_exact),
        jopt(d_witness),
        spec.locality()
    )
}

fn write_file(path: &PathBuf, contents: &[u8]) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))
}

fn cmd_field(flags: &Flags) -> Result<(), CliError> {
    let field = build_field(flags.require_q()?)?;
    println!(
        "{{\"command\":\"field\",\"q\":{},\"nonresidue\":{},\"cardinality\":{}}}",
        field.q(),
        field.nonresidue(),
        field.order()
    );
    Ok(())
}

fn cmd_places(flags: &Flags) -> Result<(), CliError> {
    let q = flags.require_q()?;
    let level = flags.require_level()?;
    let budget = flags.budget.unwrap_or(DEFAULT_PLACE_BUDGET as u64) as usize;
    let tower = Tower::new(build_field(q)?);
    let places = tower.enumerate_split_places(level, budget)?;
    if let Some(out) = &flags.out {
        let mut buf = Vec::new();
        write_places_csv(&mut buf, level, &places)?;
        write_file(out, &buf)?;
    }
    println!(
        "{{\"command\":\"places\",\"q\":{q},\"level\":{level},\"count\":{},\"out\":{}}}",
        places.len(),
        jpath(&flags.out)
    );
    Ok(())
}

fn cmd_code(flags: &Flags) -> Result<(), CliError> {
    let q = flags.require_q()?;
    let spec = CodeSpec::new(q, flags.require_level()?, flags.require_l()?)?;
    let budget = flags.budget.unwrap_or(DEFAULT_PLACE_BUDGET as u64) as usize;
    let tower = Tower::new(build_field(q)?);
    let places = tower.enumerate_split_places(spec.level(), budget)?;
    let gm = generator_matrix(tower.field(), &spec, &places, flags.threads())?;
    let k_rank = dimension_rank(tower.field(), &gm);
    if let Some(out) = &flags.out {
        let mut buf = Vec::new();
        write_generator_csv(&mut buf, &spec, &gm)?;
        write_file(out, &buf)?;
    }
    println!(
        "{{\"command\":\"code\",\"params\":{},\"out\":{}}}",
        params_json(&spec, Some(k_rank), None, None),
        jpath(&flags.out)
    );
    Ok(())
}

fn witness_summary(
    mode: &str,
    w: &WitnessReport,
    k_rank: Option<usize>,
    out: &Option<PathBuf>,
) -> String {
    format!(
        "{{\"command\":\"distance\",\"mode\":\"{mode}\",\"params\":{},\"zeros\":{},\"note\":{},\"out\":{}}}",
        params_json(&w.spec, k_rank, Some(w.weight), Some(w.weight)),
        w.zeros,
        w.note.as_deref().map_or("null".to_string(), jesc),
        jpath(out)
    )
}

fn cmd_distance(flags: &Flags) -> Result<(), CliError> {
    let q = flags.require_q()?;
    let mode = flags.mode.as_deref().unwrap_or("designed");
    let tower = Tower::new(build_field(q)?);
    let place_budget = DEFAULT_PLACE_BUDGET;
    let summary = match mode {
        "designed" => {
            let spec = CodeSpec::new(q, flags.require_level()?, flags.require_l()?)?;
            let d = spec.designed_distance();
            let note = if d <= 0 {
                "\"designed bound is vacuous (<= 0)\""
            } else {
                "null"
            };
            format!(
                "{{\"command\":\"distance\",\"mode\":\"designed\",\"params\":{},\"note\":{note},\"out\":{}}}",
                params_json(&spec, None, None, None),
                jpath(&flags.out)
            )
        }
        "exhaustive" => {
            let spec = CodeSpec::new(q, flags.require_level()?, flags.require_l()?)?;
            let budget = flags.budget.unwrap_or(DEFAULT_MESSAGE_BUDGET);
            let places = tower.enumerate_split_places(spec.level(), place_budget)?;
            let gm = generator_matrix(tower.field(), &spec, &places, flags.threads())?;
            let k_rank = dimension_rank(tower.field(), &gm);
            let res = exhaustive_min_distance(tower.field(), &gm, budget)?;
            format!(
                "{{\"command\":\"distance\",\"mode\":\"exhaustive\",\"params\":{},\
                 \"codewords_searched\":{},\"out\":{}}}",
                params_json(&spec, Some(k_rank), Some(res.distance), None),
                res.codewords_searched,
                jpath(&flags.out)
            )
        }
        "witness41" | "witness42" => {
            let w = if mode == "witness41" {
                witness41(&tower, place_budget, flags.threads())?
            } else {
                witness42(&tower, place_budget, flags.threads())?
            };
            check_witness_flags(flags, &w)?;
            // Rank only where elimination stays desk-scale.
            let cost = w.spec.k_formula() * w.spec.k_formula() * w.spec.n();
            let k_rank = if cost <= 3_000_000_000 {
                let places = tower.enumerate_split_places(2, place_budget)?;
                let gm = generator_matrix(tower.field(), &w.spec, &places, flags.threads())?;
                Some(dimension_rank(tower.field(), &gm))
            } else {
                None
            };
            witness_summary(mode, &w, k_rank, &flags.out)
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown distance mode '{other}': expected designed | exhaustive | witness41 | witness42"
            )))
        }
    };
    if let Some(out) = &flags.out {
        write_file(out, format!("{summary}\n").as_bytes())?;
    }
    println!("{summary}");
    Ok(())
}

/// Witness modes pin (level, l); explicit flags must agree.
fn check_witness_flags(flags: &Flags, w: &WitnessReport) -> Result<(), CliError> {
    if let Some(level) = flags.level {
        if level != w.spec.level() {
            return Err(CliError::Usage(format!(
                "this witness runs at --level {}, got {level}",
                w.spec.level()
            )));
        }
    }
    if let Some(l) = flags.l {
        if l != w.spec.pole_order() {
            return Err(CliError::Usage(format!(
                "this witness runs at --l {}, got {l}",
                w.spec.pole_order()
            )));
        }
    }
    Ok(())
}

fn cmd_recover(flags: &Flags) -> Result<(), CliError> {
    let q = flags.require_q()?;
    let spec = CodeSpec::new(q, flags.require_level()?, flags.require_l()?)?;
    let trials = flags.budget.unwrap_or(DEFAULT_RECOVER_TRIALS);
    let tower = Tower::new(build_field(q)?);
    let field = tower.field();
    let places = tower.enumerate_split_places(spec.level(), DEFAULT_PLACE_BUDGET)?;
    let gm = generator_matrix(field, &spec, &places, flags.threads())?;
    let sets = recovery_sets(&places, q).map_err(|e| CliError::Runtime(e.to_string()))?;
    let mut rng = SplitMix64::new(flags.seed());
    let mut failures = 0u64;
    let mut records = String::new();
    for _ in 0..trials {
        let msg: Vec<Fe> = (0..gm.k())
            .map(|_| field.from_index(rng.below(field.order() as u64) as u32).unwrap())
            .collect();
        let cw = encode(field, &gm, &msg)?;
        let erased = rng.below(places.len() as u64) as usize;
        let mut word: Vec<Option<Fe>> = cw.iter().map(|&x| Some(x)).collect();
        word[erased] = None;
        let set = set_of_position(&sets, erased)
            .ok_or_else(|| CliError::Runtime(format!("position {erased} not in any set")))?;
        let (recovered, ok) = match recover_erasure(field, set, &word, erased) {
            Ok(rep) => {
                let ok = rep.value == cw[erased] && rep.used_positions.len() as u32 == q - 1;
                (rep.value.index().to_string(), ok)
            }
            Err(_) => ("null".into(), false),
        };
        if !ok {
            failures += 1;
        }
        let line = format!(
            "{{\"set_id\":{},\"erased_pos\":{erased},\"expected\":{},\"recovered\":{recovered},\"ok\":{ok}}}",
            set.set_id,
            cw[erased].index()
        );
        println!("{line}");
        records.push_str(&line);
        records.push('\n');
    }
    if let Some(out) = &flags.out {
        write_file(out, records.as_bytes())?;
    }
    println!(
        "{{\"command\":\"recover\",\"q\":{q},\"level\":{},\"l\":{},\"seed\":{},\"trials\":{trials},\
         \"locality\":{},\"failures\":{failures},\"out\":{}}}",
        spec.level(),
        spec.pole_order(),
        flags.seed(),
        spec.locality(),
        jpath(&flags.out)
    );
    if failures > 0 {
        return Err(CliError::CheckFailed(format!("{failures} of {trials} repairs failed")));
    }
    Ok(())
}

fn cmd_verify(flags: &Flags) -> Result<(), CliError> {
    let q = flags.require_q()?;
    let suite = flags.suite.as_deref().unwrap_or("all");
    let tower = Tower::new(build_field(q)?);
    let cfg = CheckConfig {
        seed: flags.seed(),
        place_budget: flags.budget.unwrap_or(DEFAULT_PLACE_BUDGET as u64) as usize,
        message_budget: DEFAULT_MESSAGE_BUDGET,
        threads: flags.threads(),
    };
    let checks: Vec<Check> = run_suite(&tower, suite, &cfg)?;
    let mut lines = String::new();
    let mut failures = 0usize;
    for c in &checks {
        if !c.pass {
            failures += 1;
        }
        let line = format!(
            "{{\"check\":{},\"pass\":{},\"detail\":{}}}",
            jesc(&c.id),
            c.pass,
            jesc(&c.detail)
        );
        println!("{line}");
        lines.push_str(&line);
        lines.push('\n');
    }
    if let Some(out) = &flags.out {
        write_file(out, lines.as_bytes())?;
    }
    println!(
        "{{\"command\":\"verify\",\"suite\":{},\"q\":{q},\"seed\":{},\"checks\":{},\"failures\":{failures},\"out\":{}}}",
        jesc(suite),
        flags.seed(),
        checks.len(),
        jpath(&flags.out)
    );
    if failures > 0 {
        let first = checks.iter().find(|c| !c.pass).expect("counted");
        return Err(CliError::CheckFailed(format!(
            "{failures} checks failed; first: {} ({})",
            first.id, first.detail
        )));
    }
    Ok(())
}

fn figure_levels(q: u32, figure: Option<u32>) -> Result<Vec<usize>, CliError> {
    let top = (q - 1) as usize;
    Ok(match figure {
        None => (2..=top).collect(),
        Some(2) => (2..=top.min(6)).collect(),
        Some(3) => (2..=top.min(3)).collect(),
        Some(other) => {
            return Err(CliError::Usage(format!("--figure {other}: expected 2 or 3")))
        }
    })
}

fn cmd_bounds(flags: &Flags) -> Result<(), CliError> {
    let q = match (flags.q, flags.figure) {
        (Some(q), _) => q,
        (None, Some(2)) => 7,
        (None, Some(3)) => 17,
        (None, other) => {
            return Err(CliError::Usage(match other {
                Some(f) => format!("--figure {f}: expected 2 or 3"),
                None => "--q is required (or use --figure 2|3)".into(),
            }))
        }
    };
    build_field(q)?; // q validation only
    let mode = flags.mode.as_deref().unwrap_or("points");
    let curve_grid: Vec<f64> = (0..100).map(|t| t as f64 / 100.0).collect();
    match mode {
        "curve" => {
            let curve = gv_b2_curve(q, q - 1, &curve_grid)?;
            if let Some(out) = &flags.out {
                let mut buf = Vec::new();
                write_curve_csv(&mut buf, &curve)?;
                write_file(out, &buf)?;
            }
            println!(
                "{{\"command\":\"bounds\",\"mode\":\"curve\",\"q\":{q},\"r\":{},\"samples\":{},\
                 \"R_at_0\":{},\"out\":{}}}",
                q - 1,
                curve.samples.len(),
                fmt_sig12(curve.samples[0].1),
                jpath(&flags.out)
            );
        }
        "points" => {
            let levels = figure_levels(q, flags.figure)?;
            let data = figure_dataset(q, &levels)?;
            if let Some(out) = &flags.out {
                let mut buf = Vec::new();
                write_bounds_csv(&mut buf, &data)?;
                write_file(out, &buf)?;
            }
            let curve: Option<BoundCurve> = if flags.figure == Some(3) {
                Some(gv_b2_curve(q, q - 1, &curve_grid)?)
            } else {
                None
            };
            if let Some(svg) = &flags.svg {
                let mut buf = Vec::new();
                write_figure_svg(&mut buf, &data, curve.as_ref())?;
                write_file(svg, &buf)?;
            }
            println!(
                "{{\"command\":\"bounds\",\"mode\":\"points\",\"q\":{q},\"figure\":{},\"points\":{},\
                 \"warnings\":{},\"out\":{},\"svg\":{}}}",
                jopt(flags.figure),
                data.rows.len(),
                data.warnings.len(),
                jpath(&flags.out),
                jpath(&flags.svg)
            );
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown bounds mode '{other}': expected points | curve"
            )))
        }
    }
    Ok(())
}

fn cmd_explore(flags: &Flags) -> Result<(), CliError> {
    let q = flags.require_q()?;
    let spec = CodeSpec::new(q, flags.require_level()?, flags.require_l()?)?;
    let budget = flags.budget.unwrap_or(DEFAULT_EXPLORE_BUDGET);
    let tower = Tower::new(build_field(q)?);
    let report = explore_conjecture(&tower, &spec, DEFAULT_PLACE_BUDGET, budget, flags.seed())?;
    println!(
        "{{\"command\":\"explore-conjecture\",\"q\":{q},\"level\":{},\"l\":{},\"seed\":{},\
         \"best_zeros\":{},\"zero_budget\":{},\"reached_budget\":{},\"evaluations\":{},\
         \"note\":\"search lower bound over factored products; settles nothing beyond them\"}}",
        spec.level(),
        spec.pole_order(),
        flags.seed(),
        report.best_zeros,
        report.zero_budget,
        report.reached_budget,
        report.evaluations
    );
    Ok(())
}

fn run() -> Result<(), CliError> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let Some(command) = args.first() else {
        eprint!("{}", usage());
        return Err(CliError::Usage("missing command".into()));
    };
    if command == "-h" || command == "--help" || command == "help" {
        print!("{}", usage());
        return Ok(());
    }
    let flags = parse_flags(&args[1..])?;
    match command.as_str() {
        "field" => cmd_field(&flags),
        "places" => cmd_places(&flags),
        "code" => cmd_code(&flags),
        "distance" => cmd_distance(&flags),
        "recover" => cmd_recover(&flags),
        "verify" => cmd_verify(&flags),
        "bounds" => cmd_bounds(&flags),
        "explore-conjecture" => cmd_explore(&flags),
        other => Err(CliError::Usage(format!("unknown command '{other}'"))),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
