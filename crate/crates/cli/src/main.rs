//! `brpic` command-line interface.
//!
//! Exit codes: 0 on success, 1 when a computation or input file fails
//! (the error name is printed), 2 on usage errors.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use brpic::abelian::AbelianGroup;
use brpic::catalog::{self, CatalogEntry};
use brpic::cohomology::{cohomology, GModule};
use brpic::fusion::{
    algebra_profile, aut_tensor_id, invertible_objects, validate_fusion_ring, FusionRingData,
};
use brpic::galois::{
    faithfulness_check, grouped_idempotents, lagrange_idempotents, tensor_unit_decomposition,
    EmbeddingData, GaloisScenario,
};
use brpic::groups::FiniteGroup;
use brpic::seqkit::{classify_vecr_extensions, solve_brpic, verify_exactness, ExactSequenceInstance};

#[derive(Parser)]
#[command(name = "brpic", version, about = "Brauer-Picard computations for fusion categories over non-closed fields")]
struct Cli {
    /// Emit canonical JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// H^n(G; M) for a finite group and a finitely generated module.
    Cohomology {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    #[command(subcommand)]
    Galois(GaloisCommand),
    /// Fusion ring checks on a data file.
    Fusion {
        #[arg(value_enum)]
        action: FusionAction,
        #[arg(long)]
        data: PathBuf,
    },
    #[command(subcommand)]
    Seq(SeqCommand),
    #[command(subcommand)]
    Classify(ClassifyCommand),
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Run every catalog expectation and the property suite.
    VerifyPaper,
}

#[derive(Subcommand)]
enum GaloisCommand {
    /// Double-coset faithfulness test.
    Faithful {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        embeddings: PathBuf,
    },
    /// Lagrange idempotents p_i and their orbit sums P_j.
    Idempotents {
        #[arg(long)]
        scenario: PathBuf,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum FusionAction {
    Validate,
    Profile,
    Inv,
    AutId,
}

#[derive(Subcommand)]
enum SeqCommand {
    /// Order and type of BrPic from the exact sequence.
    SolveBrpic {
        #[arg(long)]
        inv: String,
        #[arg(long = "aut-t")]
        aut_t: String,
        #[arg(long)]
        br: String,
        #[arg(long = "aut-br")]
        aut_br: String,
        /// Assert H^3(K; G_m) vanishes, making the last map surjective.
        #[arg(long = "h3-trivial")]
        h3_trivial: bool,
    },
    /// Check exactness of a sequence instance.
    Verify {
        #[arg(long)]
        data: PathBuf,
    },
}

#[derive(Subcommand)]
enum ClassifyCommand {
    /// Graded extensions of Vec_R by a finite group.
    Vecr {
        #[arg(long)]
        group: PathBuf,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Show { id: String },
}

/// A failure with the name of the module error that caused it.
struct Failure {
    name: String,
    message: String,
}

impl Failure {
    fn new(name: impl Into<String>, message: impl Display) -> Self {
        Failure { name: name.into(), message: message.to_string() }
    }
}

macro_rules! named {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::new(e.name(), &e)
            }
        }
    )*};
}

named!(
    brpic::groups::GroupError,
    brpic::cohomology::CohomologyError,
    brpic::galois::GaloisError,
    brpic::fusion::FusionError,
    brpic::seqkit::SeqError,
    brpic::catalog::CatalogError
);

/// Text and JSON renderings of a result.
struct Output {
    text: String,
    json: Value,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new("IoError", format!("{}: {e}", path.display())))
}

fn group_arg(s: &str) -> Result<AbelianGroup, Failure> {
    AbelianGroup::parse(s).map_err(|e| Failure::new("SchemaError", e))
}

fn run(cli: &Cli) -> Result<(Output, bool), Failure> {
    let ok = |o: Output| Ok((o, true));
    match &cli.command {
        Command::Cohomology { group, module, degree } => {
            let g = FiniteGroup::from_json(&read(group)?)?;
            let m = GModule::from_json(&g, &read(module)?)?;
            let h = cohomology(&g, &m, *degree);
            ok(Output { text: h.to_string(), json: json!({ "degree": degree, "group": h.to_string(), "value": h }) })
        }
        Command::Galois(GaloisCommand::Faithful { scenario, embeddings }) => {
            let s = GaloisScenario::from_json(&read(scenario)?)?;
            let e = EmbeddingData::from_json(&read(embeddings)?)?;
            let r = faithfulness_check(&s, &e)?;
            let text = if r.faithful {
                "faithful".to_string()
            } else {
                format!("not faithful; ΩZ degree {} over K", r.fixed_field_index)
            };
            ok(Output { text, json: serde_json::to_value(&r).expect("serializable") })
        }
        Command::Galois(GaloisCommand::Idempotents { scenario }) => {
            let s = GaloisScenario::from_json(&read(scenario)?)?;
            let p = lagrange_idempotents(&s)?;
            let big_p = grouped_idempotents(&s)?;
            let degrees = tensor_unit_decomposition(&s);
            let p: Vec<String> = p.iter().map(|x| x.display()).collect();
            let big_p: Vec<String> = big_p.iter().map(|x| x.display()).collect();
            let mut text = format!("factor degrees {degrees:?}\n");
            for (i, x) in p.iter().enumerate() {
                text += &format!("p_{i} = {x}\n");
            }
            for (j, x) in big_p.iter().enumerate() {
                text += &format!("P_{j} = {x}\n");
            }
            ok(Output { text: text.trim_end().into(), json: json!({ "factor_degrees": degrees, "p": p, "P": big_p }) })
        }
        Command::Fusion { action, data } => {
            let d = FusionRingData::from_json(&read(data)?)?;
            fusion(*action, &d).map(|o| (o, true))
        }
        Command::Seq(SeqCommand::SolveBrpic { inv, aut_t, br, aut_br, h3_trivial }) => {
            let s = solve_brpic(&group_arg(inv)?, &group_arg(aut_t)?, &group_arg(br)?, &group_arg(aut_br)?, *h3_trivial)?;
            let text = format!("order {}, type {}", s.order, s.iso_type_text());
            ok(Output { text, json: json!({ "order": s.order, "type": s.iso_type_text() }) })
        }
        Command::Seq(SeqCommand::Verify { data }) => {
            let seq = ExactSequenceInstance::from_json(&read(data)?)?;
            let r = verify_exactness(&seq)?;
            let mut text = format!("{}\n", r.prefix);
            for n in &r.nodes {
                text += &format!(
                    "{} at {}: image {}, kernel {}\n",
                    if n.exact { "exact" } else { "NOT exact" },
                    n.label,
                    n.image_order,
                    n.kernel_order
                );
            }
            text += if r.exact { "exact" } else { "not exact" };
            Ok((Output { text, json: serde_json::to_value(&r).expect("serializable") }, r.exact))
        }
        Command::Classify(ClassifyCommand::Vecr { group }) => {
            let g = FiniteGroup::from_json(&read(group)?)?;
            let records = classify_vecr_extensions(&g)?;
            let mut text = format!("{} extensions", records.len());
            for r in &records {
                text += &format!("\nf = {:?}, phi = {}", r.f, r.phi);
            }
            ok(Output { text, json: serde_json::to_value(&records).expect("serializable") })
        }
        Command::Catalog(c) => {
            let entries = catalog::default_catalog()?;
            catalog_command(c, &entries).map(|o| (o, true))
        }
        Command::VerifyPaper => {
            let report = catalog::verify_paper();
            let pass = report.pass;
            Ok((Output { text: report.to_string(), json: serde_json::to_value(&report).expect("serializable") }, pass))
        }
    }
}

fn fusion(action: FusionAction, d: &FusionRingData) -> Result<Output, Failure> {
    Ok(match action {
        FusionAction::Validate => {
            let d = validate_fusion_ring(d)?;
            Output { text: format!("valid, rank {}", d.rank()), json: json!({ "valid": true, "rank": d.rank() }) }
        }
        FusionAction::Profile => {
            let p = algebra_profile(d);
            Output { text: p.to_string(), json: json!({ "profile": p.to_string(), "terms": p.terms.iter().map(|(l, m)| json!([l.to_string(), m])).collect::<Vec<_>>() }) }
        }
        FusionAction::Inv => {
            let inv = invertible_objects(d)?;
            let group = inv.group.as_ref().map_or_else(|| "not abelian".into(), ToString::to_string);
            Output { text: format!("{group}: {}", inv.labels.join(", ")), json: serde_json::to_value(&inv).expect("serializable") }
        }
        FusionAction::AutId => {
            let g = aut_tensor_id(d)?;
            Output { text: g.to_string(), json: json!({ "group": g.to_string(), "value": g }) }
        }
    })
}

fn catalog_command(c: &CatalogCommand, entries: &[CatalogEntry]) -> Result<Output, Failure> {
    match c {
        CatalogCommand::List => {
            let text = entries.iter().map(|e| format!("{}  {}", e.id, e.title)).collect::<Vec<_>>().join("\n");
            let ids: Vec<_> = entries.iter().map(|e| json!({ "id": e.id, "title": e.title })).collect();
            Ok(Output { text, json: json!(ids) })
        }
        CatalogCommand::Show { id } => {
            let e = catalog::find(entries, id)
                .ok_or_else(|| Failure::new("NotFound", format!("no catalog entry `{id}`")))?;
            let value = serde_json::to_value(e).expect("serializable");
            let text = serde_json::to_string_pretty(&value).expect("serializable");
            Ok(Output { text, json: value })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, success)) => {
            if cli.json {
                println!("{}", serde_json::to_string(&out.json).expect("serializable"));
            } else {
                println!("{}", out.text);
            }
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            if cli.json {
                println!("{}", json!({ "error": f.name, "message": f.message }));
            }
            eprintln!("error: {}: {}", f.name, f.message);
            ExitCode::from(1)
        }
    }
}
