use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use postlie::extension::StarProduct;
use postlie::free::{
    forest_multiset, graft_onto_levelled, permutations, phi_n, star_closed_multiset, star_closed_perm,
    word_to_levelled, ForestEngine, LevelledTree, Permutation, WordNR,
};
use postlie::trees::{butcher, contract_rightmost, enumerate_forests, left_graft_sum, parse_forest};
use postlie::verify::{
    check_left_postlie, check_right_postlie, convolution_inverse, hopf_relation_suite, pbw_dims, primitive_kernel,
    selftest, AxiomReport, Engine, FinPostLie,
};
use postlie::words::{parse_sentence, star_sentence_closed, SentenceEngine};
use postlie::{Alphabet, Error, LinComb, PRTree, Tree};

#[derive(Parser)]
#[command(name = "postlie", version, about = "Exact computation in free Post-Lie and Post-Hopf algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Comma-separated decoration symbols; inputs are checked against it.
    #[arg(long, global = true)]
    alphabet: Option<String>,
    /// Degree cutoff for the suites.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Seed for the randomized cases of `selftest`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// The recursive extension.
    Recursive,
    /// Sum over the multiset of forests (forests) or over injections (words).
    Closed,
    /// Sum over permutations (forests only).
    Perm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Right,
    Left,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineKind {
    Trees,
    Words,
}

#[derive(Subcommand)]
enum Command {
    /// Star product of two forests, e.g. `star "[a]" "[b c]"`.
    Star {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
    },
    /// The multiset of forests indexing the closed formula.
    Multiset { forest: String },
    /// Levelled tree of a word without repeated letters, e.g. `12453`.
    Levelled { word: String },
    /// Grafts the trees of a forest onto a levelled tree.
    Bmap { forest: String, levelled: String },
    /// Image of one permutation, or of every permutation when none is given.
    Phin { forest: String, permutation: Option<String> },
    /// Contracts a planar binary tree to a planar rooted tree.
    Contract { tree: String },
    /// Butcher product of two planar rooted trees, or their left grafting sum.
    Butcher {
        left: String,
        right: String,
        /// Sum over every node of the left tree instead of the root only.
        #[arg(long)]
        all_nodes: bool,
    },
    /// Star product of two sentences, e.g. `words-star "a|b" "c|d"`.
    WordsStar {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Checks the Post-Lie axioms on structure constants read from a JSON or TOML file.
    CheckAxioms {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
    },
    /// Post-Hopf relations on every basis triple within the budget (default 5).
    HopfSuite {
        #[arg(long, value_enum, default_value_t = EngineKind::Trees)]
        engine: EngineKind,
    },
    /// Convolution inverse of right multiplication (default budget 4).
    ConvInverse,
    /// Primitive dimensions against the PBW series (default budget 5).
    PrimDims,
    /// Every invariant within the budget (default 5).
    Selftest,
}

/// Either a usage problem (exit 1) or a failed verification (exit 2).
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    format: Format,
    alphabet: Option<Alphabet>,
    budget: Option<usize>,
    seed: u64,
}

impl Ctx {
    fn emit(&self, text: impl Display, value: Value) {
        match self.format {
            Format::Text => println!("{text}"),
            Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("values serialize")),
        }
    }

    fn emit_lin<B: Ord + Display>(&self, x: &LinComb<B>) {
        self.emit(x, json!(x.to_serial()));
    }

    fn emit_reports(&self, reports: &[AxiomReport]) -> Outcome {
        match self.format {
            Format::Text => {
                for r in reports {
                    print!("{r}");
                }
            }
            Format::Json => self.emit("", json!(reports)),
        }
        if reports.iter().all(AxiomReport::passed) {
            Ok(())
        } else {
            Err(Failure::Verification)
        }
    }

    fn forest(&self, src: &str) -> Result<postlie::Forest, Error> {
        parse_forest(src, self.alphabet.as_ref())
    }

    fn tree(&self, src: &str) -> Result<Tree, Error> {
        Tree::parse_with(src, self.alphabet.as_ref())
    }

    fn alphabet_or(&self, default: &str) -> Result<Alphabet, Error> {
        match &self.alphabet {
            Some(a) => Ok(a.clone()),
            None => Alphabet::parse_list(default),
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx {
        format: cli.format,
        alphabet: cli.alphabet.as_deref().map(Alphabet::parse_list).transpose()?,
        budget: cli.budget,
        seed: cli.seed,
    };
    match cli.command {
        Command::Star { left, right, method } => {
            let (x, y) = (ctx.forest(&left)?, ctx.forest(&right)?);
            let r = match method {
                Method::Recursive => ForestEngine::new().star_basis(&x, &y),
                Method::Closed => star_closed_multiset(&x, &y),
                Method::Perm => star_closed_perm(&x, &y),
            };
            ctx.emit_lin(&r);
        }
        Command::Multiset { forest } => {
            let m = forest_multiset(&ctx.forest(&forest)?);
            let entries: Vec<Value> =
                m.iter().map(|(f, k)| json!({"multiplicity": k, "forest": f.to_string()})).collect();
            ctx.emit(&m, json!(entries));
        }
        Command::Levelled { word } => {
            let t = word_to_levelled(&word.parse::<WordNR>()?);
            ctx.emit(&t, json!(t.to_string()));
        }
        Command::Bmap { forest, levelled } => {
            let t = graft_onto_levelled(&ctx.forest(&forest)?, &levelled.parse::<LevelledTree>()?)?;
            ctx.emit(&t, json!(t.to_string()));
        }
        Command::Phin { forest, permutation } => {
            let f = ctx.forest(&forest)?;
            match permutation {
                Some(p) => {
                    let image = phi_n(&f, &p.parse::<Permutation>()?)?;
                    ctx.emit(&image, json!(image.to_string()));
                }
                None => {
                    let rows: Vec<(String, String)> = permutations(f.len() as u32)
                        .iter()
                        .map(|s| Ok((s.to_string(), phi_n(&f, s)?.to_string())))
                        .collect::<Result<_, Error>>()?;
                    let text = rows.iter().map(|(s, g)| format!("{s} -> {g}")).collect::<Vec<_>>().join("\n");
                    let value: Vec<Value> = rows.iter().map(|(s, g)| json!({"permutation": s, "forest": g})).collect();
                    ctx.emit(text, json!(value));
                }
            }
        }
        Command::Contract { tree } => {
            let t = contract_rightmost(&ctx.tree(&tree)?);
            ctx.emit(&t, json!(t.to_string()));
        }
        Command::Butcher { left, right, all_nodes } => {
            let (a, b) = (left.parse::<PRTree>()?, right.parse::<PRTree>()?);
            if all_nodes {
                ctx.emit_lin(&left_graft_sum(&a, &b));
            } else {
                let t = butcher(&a, &b);
                ctx.emit(&t, json!(t.to_string()));
            }
        }
        Command::WordsStar { left, right, method } => {
            let (s, w) = (parse_sentence(&left, ctx.alphabet.as_ref())?, parse_sentence(&right, ctx.alphabet.as_ref())?);
            let r = match method {
                Method::Recursive => SentenceEngine::new().star_basis(&s, &w),
                Method::Closed => star_sentence_closed(&s, &w),
                Method::Perm => return Err(Failure::Usage("`perm` applies to forests only".into())),
            };
            ctx.emit_lin(&r);
        }
        Command::CheckAxioms { file, side } => {
            let a = FinPostLie::from_path(&file)?;
            let mut reports = Vec::new();
            if side != Side::Left {
                reports.push(check_right_postlie(&a));
            }
            if side != Side::Right {
                reports.push(check_left_postlie(&a));
            }
            return ctx.emit_reports(&reports);
        }
        Command::HopfSuite { engine } => {
            let budget = ctx.budget.unwrap_or(5);
            let engine = match engine {
                EngineKind::Trees => Engine::Trees(ctx.alphabet_or("•")?),
                EngineKind::Words => Engine::Words(ctx.alphabet_or("a,b")?),
            };
            return ctx.emit_reports(&[hopf_relation_suite(&engine, budget)?]);
        }
        Command::ConvInverse => {
            let inv = convolution_inverse(ctx.budget.unwrap_or(4))?;
            return ctx.emit_reports(&[inv.report]);
        }
        Command::PrimDims => return prim_dims(&ctx),
        Command::Selftest => return ctx.emit_reports(&selftest(ctx.budget.unwrap_or(5), ctx.seed)?),
    }
    Ok(())
}

fn prim_dims(ctx: &Ctx) -> Outcome {
    let budget = ctx.budget.unwrap_or(5);
    let alphabet = ctx.alphabet_or("•")?;
    let counts: Vec<i64> = (1..=budget).map(|d| enumerate_forests(d, &alphabet).len() as i64).collect();
    let mut generators = Vec::new();
    for d in 1..=budget {
        // Generators of degree d are the single trees of degree d.
        let trees = enumerate_forests(d, &alphabet).iter().filter(|f| f.len() == 1).count();
        generators.push(trees as i64);
    }
    let series = pbw_dims(&generators, budget)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for d in 1..=budget {
        let kernel = primitive_kernel(d, &alphabet)?.dimension as i64;
        ok &= kernel == series.l[d - 1] && counts[d - 1] == series.h[d];
        rows.push((d, counts[d - 1], kernel, series.l[d - 1]));
    }
    let text = rows
        .iter()
        .map(|(d, h, k, l)| format!("degree {d}: forests {h}, kernel {k}, series {l}"))
        .collect::<Vec<_>>()
        .join("\n");
    let value: Vec<Value> = rows
        .iter()
        .map(|(d, h, k, l)| json!({"degree": d, "forests": h, "kernel": k, "series": l}))
        .collect();
    ctx.emit(text, json!(value));
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
    }
}
