use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ordwalk::export::{self, Show};
use ordwalk::norders::{self, Hypertournament, RhoTable};
use ordwalk::walks_classic::{rho1, upper_trace};
use ordwalk::walks_higher::expand_tr;
use ordwalk::{parse_selector, Error, Ordinal};

mod checks;

#[derive(Parser)]
#[command(name = "ordwalk", version, about = "Walks on ordinals below epsilon_0 and their higher-dimensional versions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical walk from beta down to alpha
    Walk(WalkArgs),
    /// Signed higher walk tree Tr_n(+, a0, .., an)
    Hwalk(HwalkArgs),
    /// Sampled property check; exits 1 on a violation
    Check(checks::CheckArgs),
    /// Hypertournament induced by a rho function on a finite ground set
    Norder(NorderArgs),
    /// Exhaustive enumeration of small hypertournaments
    Enumerate(EnumerateArgs),
    /// Ordinal utilities
    #[command(subcommand)]
    Ord(OrdCommand),
}

#[derive(Args)]
struct WalkArgs {
    alpha: String,
    beta: String,
    /// trivial | canonical | compound:<m> | square:<m> | full:<ordinal>[,<selector>]
    #[arg(long, default_value = "canonical")]
    cseq: String,
    #[arg(long, value_enum)]
    show: Option<WalkShow>,
    #[arg(long)]
    json: bool,
    /// Write to a file instead of stdout
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum WalkShow {
    Trace,
    Lower,
    Rho1,
    Rho2,
}

#[derive(Args)]
struct HwalkArgs {
    /// Dimension; the walk takes n+1 ordinals
    #[arg(short = 'n', default_value_t = 2)]
    n: usize,
    #[arg(required = true)]
    tuple: Vec<String>,
    #[arg(long, default_value = "canonical")]
    cseq: String,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
    #[arg(long, value_enum, default_value = "both")]
    show: ShowArg,
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShowArg {
    Outputs,
    Inputs,
    Both,
}

#[derive(Args)]
struct NorderArgs {
    #[arg(short = 'n', default_value_t = 2)]
    n: usize,
    /// Comma-separated ordinals
    #[arg(long)]
    ground: String,
    #[arg(long, value_enum, default_value = "rho2n")]
    rho: RhoArg,
    #[arg(long, default_value = "canonical")]
    cseq: String,
    /// Classify every (n+2)-subset
    #[arg(long)]
    classify: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum RhoArg {
    Rho2n,
    Zero,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(value_enum)]
    kind: EnumKind,
    #[arg(long, default_value_t = 4)]
    vertices: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    H3,
}

#[derive(Subcommand)]
enum OrdCommand {
    /// Prints less, equal or greater
    Cmp { a: String, b: String },
    /// Normal form, shape and ladder
    Show { a: String },
}

/// Failure of a command: a usage problem (exit 2) or a violated property (exit 1).
pub enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Selector(_) | Error::BadArgs(_) | Error::OrderTooLow { .. } | Error::NotIndex(_) => {
                Failure::Usage(e.to_string())
            }
            e => Failure::Violation(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub fn parse_ord(s: &str) -> Result<Ordinal, Failure> {
    s.trim().parse::<Ordinal>().map_err(|e| Failure::Usage(format!("{s:?}: {e}")))
}

fn emit(output: &Option<String>, body: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn walk(a: WalkArgs) -> Result<(), Failure> {
    let (alpha, beta) = (parse_ord(&a.alpha)?, parse_ord(&a.beta)?);
    let c = parse_selector(&a.cseq, 1, None)?;
    let tr = upper_trace(&c, &alpha, &beta)?;
    let r1 = rho1(&c, &alpha, &beta).ok();
    let join = |v: &[Ordinal]| v.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(" ");
    let r1s = r1.map_or("infinite".to_string(), |v| v.to_string());
    let body = if a.json {
        export::walk_json(&tr, r1) + "\n"
    } else {
        match a.show {
            Some(WalkShow::Trace) => join(&tr.steps) + "\n",
            Some(WalkShow::Lower) => join(&tr.lower) + "\n",
            Some(WalkShow::Rho1) => r1s + "\n",
            Some(WalkShow::Rho2) => format!("{}\n", tr.rho2()),
            None => format!(
                "steps: {}\nlower: {}\nrho2: {}\nrho1: {r1s}\n",
                join(&tr.steps),
                join(&tr.lower),
                tr.rho2()
            ),
        }
    };
    emit(&a.output, &body)
}

fn hwalk(a: HwalkArgs) -> Result<(), Failure> {
    if a.n == 0 || a.tuple.len() != a.n + 1 {
        return Err(Failure::Usage(format!("-n {} needs {} ordinals, got {}", a.n, a.n + 1, a.tuple.len())));
    }
    let t = a.tuple.iter().map(|s| parse_ord(s)).collect::<Result<Vec<_>, _>>()?;
    let c = parse_selector(&a.cseq, a.n, None)?;
    let tree = expand_tr(&c, 1, &t)?;
    let body = match a.format {
        Format::Json => export::tree_json(&tree),
        Format::Dot => export::tree_dot(&tree),
        Format::Ascii => {
            let show = match a.show {
                ShowArg::Outputs => Show::Outputs,
                ShowArg::Inputs => Show::Inputs,
                ShowArg::Both => Show::Both,
            };
            let outputs = tree.tree_type().len();
            format!("{}rho2n: {}  outputs: {outputs}\n", export::tree_ascii(&tree, show), tree.charge())
        }
    };
    emit(&a.output, &body)
}

fn norder(a: NorderArgs) -> Result<(), Failure> {
    if a.n == 0 {
        return Err(Failure::Usage("-n must be positive".into()));
    }
    let mut ground = a.ground.split(',').map(parse_ord).collect::<Result<Vec<_>, _>>()?;
    ground.sort();
    ground.dedup();
    if ground.len() < a.n + 1 {
        return Err(Failure::Usage(format!("ground set needs at least {} points", a.n + 1)));
    }
    let h = match a.rho {
        RhoArg::Rho2n => {
            let c = parse_selector(&a.cseq, a.n, None)?;
            let table = RhoTable::rho2n(&c, &ground, a.n)?;
            Hypertournament::from_rho(&|x: &Ordinal, t: &[Ordinal]| table.eval(x, t), &ground, a.n)
        }
        RhoArg::Zero => Hypertournament::from_rho(&|_: &Ordinal, _: &[Ordinal]| 0, &ground, a.n),
    };
    let name = |s: &[usize]| s.iter().map(|&i| ground[i].to_string()).collect::<Vec<_>>();
    let witness = h.h_free_witness();
    let classes: Vec<(Vec<usize>, norders::Classification)> = if a.classify {
        norders::subsets(ground.len(), a.n + 2)
            .into_iter()
            .map(|q| {
                let cl = h.classify_restriction(&q);
                (q, cl)
            })
            .collect()
    } else {
        Vec::new()
    };
    let mut out = String::new();
    if a.json {
        let orientation: Vec<_> = h
            .bits()
            .map(|(s, b)| serde_json::json!({"subset": name(s), "holds": b}))
            .collect();
        let cls: Vec<_> = classes
            .iter()
            .map(|(q, c)| {
                serde_json::json!({"subset": name(q), "h_type": c.h_type, "tag": c.tag.map(|t| t.to_string())})
            })
            .collect();
        let mut v = serde_json::json!({
            "n": a.n,
            "ground": ground.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
            "orientation": orientation,
            "h_free": witness.is_none(),
            "witness": witness.as_ref().map(|w| name(w)),
        });
        if a.classify {
            v["classes"] = serde_json::Value::Array(cls);
        }
        out = v.to_string() + "\n";
    } else {
        for (s, b) in h.bits() {
            out += &format!("({}) {}\n", name(s).join(","), if b { "+" } else { "-" });
        }
        for (q, c) in &classes {
            let tag = c.tag.map(|t| format!(" {t}")).unwrap_or_default();
            let kind = if c.h_type { "cycle" } else { "acyclic" };
            out += &format!("[{}] {kind}{tag}\n", name(q).join(","));
        }
        match &witness {
            None => out += "H-free: yes\n",
            Some(w) => out += &format!("H-free: no, witness ({})\n", name(w).join(",")),
        }
    }
    emit(&None, &out)
}

fn enumerate(a: EnumerateArgs) -> Result<(), Failure> {
    let EnumKind::H3 = a.kind;
    if !(3..=5).contains(&a.vertices) {
        return Err(Failure::Usage("--vertices must be between 3 and 5".into()));
    }
    let all = norders::enumerate(a.vertices, 3, 16).map_err(Failure::from)?;
    let mut classes = std::collections::BTreeSet::new();
    let mut free_classes = std::collections::BTreeSet::new();
    let mut free = 0;
    for h in &all {
        let f = h.canonical_form();
        if h.is_h_free() {
            free += 1;
            free_classes.insert(f.clone());
        }
        classes.insert(f);
    }
    let mut out = format!(
        "vertices: {}\nlabelled: {}\nunlabelled: {}\nH4-free labelled: {free}\nH4-free unlabelled: {}\n",
        a.vertices,
        all.len(),
        classes.len(),
        free_classes.len()
    );
    if a.vertices == 4 {
        for (tag, (l, u)) in norders::h3_census() {
            out += &format!("{tag}: labelled {l}, unlabelled {u}\n");
        }
    }
    emit(&None, &out)
}

fn ord_cmd(c: OrdCommand) -> Result<(), Failure> {
    let out = match c {
        OrdCommand::Cmp { a, b } => {
            let o = ordwalk::ordinal::compare(&parse_ord(&a)?, &parse_ord(&b)?);
            format!("{}\n", format!("{o:?}").to_lowercase())
        }
        OrdCommand::Show { a } => {
            let x = parse_ord(&a)?;
            let kind = match x.kind() {
                ordwalk::ordinal::Kind::Zero => "zero".to_string(),
                ordwalk::ordinal::Kind::Successor(p) => format!("successor of {p}"),
                ordwalk::ordinal::Kind::Limit => {
                    let ladder: Vec<String> =
                        (0..4).filter_map(|k| x.fundamental_sequence(k)).map(|o| o.to_string()).collect();
                    format!("limit, ladder {}, ...", ladder.join(", "))
                }
            };
            format!("{x}\n{kind}\n")
        }
    };
    emit(&None, &out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Walk(a) => walk(a),
        Command::Hwalk(a) => hwalk(a),
        Command::Check(a) => checks::run(a),
        Command::Norder(a) => norder(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Ord(c) => ord_cmd(c),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(msg)) => {
            eprintln!("violation: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
