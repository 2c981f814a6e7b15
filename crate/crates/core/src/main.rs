use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use signedwilf::genenum::{self, AmbientSet};
use signedwilf::perm::Pattern;
use signedwilf::report::{self, SequenceRow};
use signedwilf::symmetry::enumerate_symmetry_classes;
use signedwilf::tables::{self, CountTable, SequenceTable};
use signedwilf::verify::{self, Bijection};
use signedwilf::wilf::{self, CostGuard, WilfError};

const EXIT_USAGE: u8 = 1;
const EXIT_FAILED: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(name = "signedwilf", version, about = "Pattern avoidance and Wilf classification for signed permutations")]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "SIGNEDWILF_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetArg {
    B,
    Si,
}

impl From<SetArg> for AmbientSet {
    fn from(s: SetArg) -> Self {
        match s {
            SetArg::B => AmbientSet::B,
            SetArg::Si => AmbientSet::SI,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Count the elements of B_n or SI_n avoiding a pattern
    Count {
        /// Pattern, e.g. "1,-3,2" (minus marks a bar)
        #[arg(long, allow_hyphen_values = true)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "b")]
        set: SetArg,
        /// Run even if the job exceeds the cost guard
        #[arg(long)]
        force: bool,
    },
    /// Recompute one of the published tables 1-6
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        which: u8,
        /// Largest n (tables 1-4) or largest pattern length (tables 5-6)
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Allow length-5 columns and other long runs
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        force: bool,
    },
    /// Classify all patterns of one length into Wilf classes
    Classify {
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value = "b")]
        set: SetArg,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Allow pattern length 5 and lift the cost guard
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        force: bool,
        /// Write the report here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a bijection's properties exhaustively over B_m, m <= n
    Verify {
        #[arg(long)]
        bijection: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        pattern: Option<String>,
        #[arg(long)]
        force: bool,
    },
    /// Check every known equivalence instance by counting
    Theorems {
        #[arg(long, default_value_t = 7)]
        nmax: usize,
        /// Longest pattern length to instantiate
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Guard(String),
    Verification(String),
}

impl From<WilfError> for Failure {
    fn from(e: WilfError) -> Self {
        match e {
            WilfError::CostGuard { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn guard(force: bool) -> CostGuard {
    if force {
        CostGuard::unlimited()
    } else {
        CostGuard::default()
    }
}

fn parse(text: &str) -> Result<Pattern, Failure> {
    Pattern::parse(text).map_err(|e| Failure::Usage(format!("invalid pattern {text:?}: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Guard(m)) => {
            eprintln!("refused: {m}");
            ExitCode::from(EXIT_GUARD)
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(EXIT_FAILED)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Count { pattern, n, set, force } => {
            let tau = parse(&pattern)?;
            let set = AmbientSet::from(set);
            guard(force).check(set.size(n))?;
            Ok(format!("{}\n", genenum::count_avoiders(n, &tau, set)))
        }
        Command::Table { which, nmax, format, extended, force } => {
            if let Some(t) = tables::sequence_table(which) {
                sequence_table(t, nmax.unwrap_or(t.n_max), format, guard(force || extended))
            } else {
                let t = tables::count_table(which).expect("which is range-checked");
                count_table(t, nmax.unwrap_or(4), format, extended)
            }
        }
        Command::Classify { length, set, nmax, format, extended, force, output } => {
            let set = AmbientSet::from(set);
            if length == 0 {
                return Err(Failure::Usage("--length must be at least 1".into()));
            }
            if length > 4 && !extended {
                return Err(Failure::Guard(format!("pattern length {length} needs --extended (long run)")));
            }
            let n_max = nmax.unwrap_or_else(|| tables::default_n_max(set, length));
            let report = wilf::classify(length, set, n_max, guard(force || extended))?;
            let text = match format {
                Format::Csv => report::classification_csv(&report),
                Format::Json => report::classification_json(&report),
                Format::Text => classification_text(&report),
            };
            match output {
                Some(path) => {
                    fs::write(&path, text)
                        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                    Ok(format!("{} Wilf classes written to {}\n", report.wilf_class_count(), path.display()))
                }
                None => Ok(text),
            }
        }
        Command::Verify { bijection, n, r, pattern, force } => {
            let b: Bijection = bijection.parse().map_err(|e: verify::VerifyError| Failure::Usage(e.to_string()))?;
            let pattern = pattern.as_deref().map(parse).transpose()?;
            guard(force).check(wilf::estimate_cost(AmbientSet::B, n, 1))?;
            let outcomes = verify::run_suite(b, n, r, pattern.as_ref()).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut out = String::new();
            for o in &outcomes {
                match &o.counterexample {
                    None => out.push_str(&format!("PASS {} ({} checked)\n", o.name, o.checked)),
                    Some(c) => out.push_str(&format!("FAIL {} ({} checked): {c}\n", o.name, o.checked)),
                }
            }
            if outcomes.iter().all(|o| o.passed()) {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Theorems { nmax, max_len, format, force } => {
            let report = wilf::verify_theorem_suite(nmax, max_len, guard(force))?;
            let out = match format {
                Format::Json => report::to_json(&serde_json::to_value(&report).expect("report serializes")),
                _ => {
                    let mut s = String::new();
                    for i in &report.instances {
                        let verdict = match i.verdict {
                            wilf::Verdict::Consistent => "consistent".to_string(),
                            wilf::Verdict::RefutedAt { n, left, right } => format!("refuted at n={n} ({left} vs {right})"),
                        };
                        s.push_str(&format!("{:?} {} vs {} in {}: {verdict}\n", i.statement, i.left, i.right, i.set));
                    }
                    s.push_str(&format!(
                        "{} instances, {} refuted, n <= {}\n",
                        report.instances.len(),
                        report.failures().count(),
                        report.n_max
                    ));
                    s
                }
            };
            if report.all_consistent() {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

fn classification_text(report: &wilf::ClassificationReport) -> String {
    let mut s = format!(
        "length {} over {}: {} symmetry classes, {} Wilf classes (distinct up to n = {})\n",
        report.k,
        report.set,
        report.symmetry_class_count,
        report.wilf_class_count(),
        report.n_max
    );
    for c in &report.wilf_classes {
        let members: Vec<String> = c.members.iter().map(Pattern::text).collect();
        s.push_str(&format!("{}  [{}]\n", join(&c.sequence.counts), members.join(" ")));
    }
    s
}

fn join(counts: &[u64]) -> String {
    counts.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn sequence_table(t: &SequenceTable, n_max: usize, format: Format, guard: CostGuard) -> Result<String, Failure> {
    guard.check(wilf::estimate_cost(t.set, n_max, t.rows.len()))?;
    let patterns: Vec<Pattern> = t.rows.iter().map(|r| Pattern::parse(r.pattern).expect("published rows parse")).collect();
    let seqs = wilf::sequences(&patterns, t.set, n_max);
    let matches: Vec<bool> = t
        .rows
        .iter()
        .zip(&seqs)
        .map(|(r, s)| r.counts.iter().zip(&s.counts).all(|(a, b)| a == b))
        .collect();
    let all_match = matches.iter().all(|&m| m);
    let out = match format {
        Format::Text => {
            let mut s = format!("Table {}: {}, n = 0..{}\n", t.number, t.title, n_max);
            let width = t.rows.iter().map(|r| r.pattern.len()).max().unwrap_or(0);
            for ((r, seq), ok) in t.rows.iter().zip(&seqs).zip(&matches) {
                let status = if *ok { "ok" } else { "MISMATCH" };
                s.push_str(&format!("{:<width$}  {}  {status}\n", r.pattern, join(&seq.counts)));
            }
            s
        }
        Format::Csv => {
            let rows: Vec<SequenceRow> = t
                .rows
                .iter()
                .zip(&seqs)
                .map(|(r, s)| SequenceRow { pattern: r.pattern.to_string(), counts: s.counts.clone() })
                .collect();
            report::sequences_csv(&rows, n_max)
        }
        Format::Json => {
            let rows: Vec<_> = t
                .rows
                .iter()
                .zip(&seqs)
                .zip(&matches)
                .map(|((r, s), ok)| {
                    json!({
                        "pattern": r.pattern,
                        "counts": s.counts,
                        "published": r.counts,
                        "matches_published": ok,
                    })
                })
                .collect();
            report::to_json(&json!({
                "table": t.number,
                "title": t.title,
                "set": t.set,
                "n_max": n_max,
                "rows": rows,
            }))
        }
    };
    if all_match {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn count_table(t: &CountTable, max_len: usize, format: Format, extended: bool) -> Result<String, Failure> {
    if max_len == 0 || max_len > 5 {
        return Err(Failure::Usage("--nmax for tables 5 and 6 is a pattern length in 1..=5".into()));
    }
    if max_len == 5 && !extended {
        return Err(Failure::Guard("the length-5 Wilf column needs --extended (long run)".into()));
    }
    let mut symmetry = Vec::new();
    let mut wilf_counts = Vec::new();
    for k in 1..=max_len {
        symmetry.push(enumerate_symmetry_classes(k, t.mode).len());
        let n_max = if k == 5 { t.length5_n_max } else { tables::default_n_max(t.set, k) };
        let report = wilf::classify(k, t.set, n_max, CostGuard::unlimited())?;
        wilf_counts.push(report.wilf_class_count());
    }
    let published_wilf: Vec<String> = (1..=max_len)
        .map(|k| match t.wilf_classes.get(k - 1) {
            Some(c) => c.to_string(),
            None => format!(">={} <={}", t.length5_bounds.0, t.length5_bounds.1),
        })
        .collect();
    let sym_ok = symmetry.iter().zip(t.symmetry_classes).all(|(a, b)| a == b);
    let wilf_ok = wilf_counts.iter().zip(t.wilf_classes).all(|(a, b)| a == b)
        && (max_len < 5 || wilf_counts[4] >= t.length5_bounds.0);
    let out = match format {
        Format::Text => {
            let nums = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            format!(
                "Table {}: {}, lengths 1..{}\nsymmetry classes  {}\nWilf classes      {}\npublished Wilf    {}\n",
                t.number,
                t.title,
                max_len,
                nums(&symmetry),
                nums(&wilf_counts),
                published_wilf.join(" ")
            )
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["row".to_string()];
            header.extend((1..=max_len).map(|k| format!("k{k}")));
            w.write_record(&header).expect("in-memory write");
            let mut rec = vec!["symmetry_classes".to_string()];
            rec.extend(symmetry.iter().map(usize::to_string));
            w.write_record(&rec).expect("in-memory write");
            let mut rec = vec!["wilf_classes".to_string()];
            rec.extend(wilf_counts.iter().map(usize::to_string));
            w.write_record(&rec).expect("in-memory write");
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
        }
        Format::Json => report::to_json(&json!({
            "table": t.number,
            "title": t.title,
            "set": t.set,
            "mode": t.mode,
            "lengths": (1..=max_len).collect::<Vec<_>>(),
            "symmetry_classes": symmetry,
            "wilf_classes": wilf_counts,
            "published_symmetry_classes": &t.symmetry_classes[..max_len],
            "published_wilf_classes": published_wilf,
        })),
    };
    if sym_ok && wilf_ok {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}
