mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use reticulation::algebra::{boolean_center, check_arithmetic, is_pseudocomplemented};
use reticulation::constructions::{boolean_power, colimit, direct_product, Colimit, InductiveSystem};
use reticulation::dot::export_dot;
use reticulation::filters::{all_filters, generated_filter, quotient_rl};
use reticulation::golden::documented_facts;
use reticulation::io::{AlgebraDocument, AnyAlgebra};
use reticulation::reticulation::{quotient_comparison, transport_filters};
use reticulation::stone::{co_ann_algebra, is_stone, is_strongly_stone, m_stone_conditions, negation_identity};
use reticulation::{reticulate, FiniteAlgebra, FiniteBoundedLattice, Report, SearchOptions};

use source::AnySystem;

/// Finite residuated lattices, their reticulation and Stone-type properties.
///
/// FILE arguments are paths to algebra documents; `.alg` is appended when the
/// path does not exist, and built-in names (kowalski6, iorgulescu5,
/// iorgulescu12, chain<k>) are accepted as well.
#[derive(Parser)]
#[command(name = "reticulation", version)]
struct Cli {
    /// Largest carrier the isomorphism search accepts.
    #[arg(long, global = true, default_value_t = 256)]
    max_search: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an algebra, then run the arithmetic self-checks.
    Validate { file: String },
    /// Print L(A), the map λ and the reticulation axiom report.
    Reticulate { file: String },
    /// List every filter and check the filter transport along λ.
    Filters { file: String },
    /// Compare L(A/F) with L(A)/λ(F) for the filter generated by ELEMS.
    Quotient {
        file: String,
        /// Generators, comma or space separated names or indices.
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        filter: Vec<String>,
    },
    /// Stone, strongly Stone and m-Stone report with B(A) and Co-Ann(A).
    Stone { file: String },
    /// Direct product of two algebras, written as an algebra document.
    Product {
        left: String,
        right: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Boolean power A[B] with B the Boolean algebra on K atoms.
    Power {
        file: String,
        #[arg(long)]
        atoms: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Inductive limit of the system described by SYSTEMFILE.
    Colimit {
        system: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the documented facts about the built-in algebras.
    CheckPaper,
    /// Hasse diagram as a Graphviz digraph.
    ExportDot {
        file: String,
        /// Draw L(A) instead of A.
        #[arg(long)]
        reticulation: bool,
    },
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_report(r: &Report) -> bool {
    print!("{r}");
    r.passed()
}

fn emit(doc: &AlgebraDocument, header: &[String], output: Option<&PathBuf>) -> Result<()> {
    let mut text = String::new();
    for line in header {
        text.push_str(&format!("# {line}\n"));
    }
    text.push_str(&doc.to_text());
    match output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn validate(file: &str) -> Result<bool> {
    let (name, a) = source::algebra(file)?;
    println!("{name}: valid {} with {} elements", kind_of(&a), a_size(&a));
    match a {
        AnyAlgebra::Residuated(a) => Ok(print_report(&check_arithmetic(&a))),
        AnyAlgebra::Lattice(l) => {
            println!("pseudocomplemented: {}", yes_no(is_pseudocomplemented(&l)));
            Ok(true)
        }
    }
}

fn kind_of(a: &AnyAlgebra) -> &'static str {
    match a {
        AnyAlgebra::Residuated(_) => "residuated lattice",
        AnyAlgebra::Lattice(_) => "bounded distributive lattice",
    }
}

fn a_size(a: &AnyAlgebra) -> usize {
    match a {
        AnyAlgebra::Residuated(a) => a.size(),
        AnyAlgebra::Lattice(l) => l.size(),
    }
}

fn reticulate_cmd(file: &str) -> Result<bool> {
    let (name, a) = source::residuated(file)?;
    let r = reticulate(&a)?;
    let l = r.lattice();
    println!("L({name}) has {} elements", l.size());
    print!("{}", AlgebraDocument::from_algebra(&format!("L({name})"), l).to_text());
    println!("lambda:");
    for x in a.elements() {
        println!("  {} -> {}", a.name(x), l.name(r.lambda_of(x)));
    }
    Ok(print_report(&r.check_axioms()))
}

fn list_filters<A: FiniteAlgebra>(a: &A) -> Result<()> {
    let fl = all_filters(a)?;
    println!("{} filters:", fl.len());
    for f in fl.filters() {
        println!("  {}", a.format_set(f.members()));
    }
    Ok(())
}

fn filters_cmd(file: &str) -> Result<bool> {
    match source::algebra(file)?.1 {
        AnyAlgebra::Lattice(l) => list_filters(&l).map(|_| true),
        AnyAlgebra::Residuated(a) => {
            list_filters(&a)?;
            let r = reticulate(&a)?;
            match transport_filters(&r) {
                Ok(t) => {
                    println!("F ↦ λ(F) is an isomorphism onto the {} filters of L(A)", t.target.len());
                    Ok(true)
                }
                Err(e) => {
                    println!("filter transport failed: {e}");
                    Ok(false)
                }
            }
        }
    }
}

fn print_elements<A: FiniteAlgebra>(title: &str, a: &A) {
    println!("{title} ({} elements): {}", a.size(), a.format_set(a.elements()));
}

fn quotient_cmd(file: &str, gens: &[String], opts: &SearchOptions) -> Result<bool> {
    let (name, a) = source::residuated(file)?;
    let gens: Vec<usize> = gens
        .iter()
        .flat_map(|g| g.split_whitespace())
        .map(|g| a.element(g))
        .collect::<reticulation::Result<_>>()?;
    let f = generated_filter(&a, gens);
    println!("F = {}", a.format_set(f.members()));
    let (q, proj) = quotient_rl(&a, &f)?;
    print_elements(&format!("{name}/F"), &q);
    for c in q.elements() {
        let class = a.elements().filter(|&x| proj.apply(x) == c);
        println!("  {} = {}", q.name(c), a.format_set(class));
    }
    let r = reticulate(&a)?;
    let cmp = quotient_comparison(&r, &f, opts)?;
    print_elements("L(A/F)", cmp.retic_of_quotient.lattice());
    print_elements("L(A)/λ(F)", &cmp.quotient_of_retic);
    println!("h: L(A)/λ(F) -> L(A/F)");
    for x in cmp.quotient_of_retic.elements() {
        println!(
            "  {} -> {}",
            cmp.quotient_of_retic.name(x),
            cmp.retic_of_quotient.lattice().name(cmp.surjection.apply(x))
        );
    }
    println!(
        "sizes: |L(A/F)| = {}, |L(A)/λ(F)| = {}",
        cmp.retic_of_quotient.lattice().size(),
        cmp.quotient_of_retic.size()
    );
    println!("isomorphic: {}", yes_no(cmp.isomorphic()));
    Ok(cmp.isomorphic())
}

fn stone_report<A: FiniteAlgebra>(a: &A, opts: &SearchOptions) -> Result<()> {
    let b = boolean_center(a);
    println!("B(A) = {}", a.format_set(b.elements().iter().copied()));
    let ca = co_ann_algebra(a)?;
    println!("Co-Ann(A) ({} members):", ca.len());
    for f in ca.members() {
        println!("  {}", a.format_set(f.members()));
    }
    match is_stone(a).counterexample {
        None => println!("Stone: yes"),
        Some(x) => {
            let t = reticulation::stone::co_annihilator(a, [x]);
            println!("Stone: no (witness {}, {}^⊤={})", a.name(x), a.name(x), a.format_set(t.members()));
        }
    }
    match is_strongly_stone(a)?.counterexample {
        None => println!("strongly Stone: yes"),
        Some(f) => println!("strongly Stone: no (witness {} is not <e> for e in B(A))", a.format_set(f.members())),
    }
    let m = m_stone_conditions(a, opts)?;
    let labels = ["(i)", "(ii)", "(iii) as a sublattice", "(iii) up to embedding", "(iv)", "(v)"];
    println!("m-Stone conditions:");
    for (l, v) in labels.iter().zip(m.values()) {
        println!("  {l}: {}", yes_no(v));
    }
    println!("conditions agree: {}", yes_no(m.agreement()));
    Ok(())
}

fn stone_cmd(file: &str, opts: &SearchOptions) -> Result<bool> {
    match source::algebra(file)?.1 {
        AnyAlgebra::Lattice(l) => stone_report(&l, opts)?,
        AnyAlgebra::Residuated(a) => {
            stone_report(&a, opts)?;
            match negation_identity(&a).counterexample {
                None => println!("~a v ~~a = 1: yes"),
                Some((x, v)) => println!("~a v ~~a = 1: no (at {}, value {})", a.name(x), a.name(v)),
            }
        }
    }
    Ok(true)
}

fn product_cmd(left: &str, right: &str, output: Option<&PathBuf>) -> Result<bool> {
    let (ln, l) = source::algebra(left)?;
    let (rn, r) = source::algebra(right)?;
    let name = format!("{ln}x{rn}");
    let doc = match (l, r) {
        (AnyAlgebra::Residuated(l), AnyAlgebra::Residuated(r)) => {
            AlgebraDocument::from_algebra(&name, &direct_product(&[&l, &r])?.0)
        }
        (AnyAlgebra::Lattice(l), AnyAlgebra::Lattice(r)) => {
            AlgebraDocument::from_algebra(&name, &direct_product(&[&l, &r])?.0)
        }
        _ => bail!("both factors must have the same kind"),
    };
    emit(&doc, &[], output)?;
    Ok(true)
}

fn power_cmd(file: &str, atoms: usize, output: Option<&PathBuf>) -> Result<bool> {
    let (name, a) = source::algebra(file)?;
    let b = FiniteBoundedLattice::boolean(atoms)?;
    let name = format!("{name}[B{}]", b.size());
    let doc = match a {
        AnyAlgebra::Residuated(a) => AlgebraDocument::from_algebra(&name, &boolean_power(&a, &b)?.algebra),
        AnyAlgebra::Lattice(l) => AlgebraDocument::from_algebra(&name, &boolean_power(&l, &b)?.algebra),
    };
    emit(&doc, &[], output)?;
    Ok(true)
}

fn colimit_doc<T: FiniteAlgebra>(s: &InductiveSystem<T>) -> Result<(AlgebraDocument, Vec<String>)> {
    let Colimit { algebra, injections } = colimit(s)?;
    let header = injections
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let imgs: Vec<&str> = m.map().iter().map(|&x| algebra.name(x)).collect();
            format!("injection {i}: {}", imgs.join(" "))
        })
        .collect();
    Ok((AlgebraDocument::from_algebra("colimit", &algebra), header))
}

fn colimit_cmd(system: &str, output: Option<&PathBuf>) -> Result<bool> {
    let (doc, header) = match source::system(system)? {
        AnySystem::Residuated(s) => colimit_doc(&s)?,
        AnySystem::Lattice(s) => colimit_doc(&s)?,
    };
    emit(&doc, &header, output)?;
    Ok(true)
}

fn export_dot_cmd(file: &str, retic: bool) -> Result<bool> {
    let (name, a) = source::algebra(file)?;
    let text = match (a, retic) {
        (AnyAlgebra::Residuated(a), true) => export_dot(reticulate(&a)?.lattice(), &format!("L({name})")),
        (AnyAlgebra::Lattice(_), true) => bail!("--reticulation needs a residuated lattice"),
        (AnyAlgebra::Residuated(a), false) => export_dot(&a, &name),
        (AnyAlgebra::Lattice(l), false) => export_dot(&l, &name),
    };
    print!("{text}");
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    let opts = SearchOptions {
        max_size: cli.max_search,
    };
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Reticulate { file } => reticulate_cmd(file),
        Command::Filters { file } => filters_cmd(file),
        Command::Quotient { file, filter } => quotient_cmd(file, filter, &opts),
        Command::Stone { file } => stone_cmd(file, &opts),
        Command::Product { left, right, output } => product_cmd(left, right, output.as_ref()),
        Command::Power { file, atoms, output } => power_cmd(file, *atoms, output.as_ref()),
        Command::Colimit { system, output } => colimit_cmd(system, output.as_ref()),
        Command::CheckPaper => Ok(print_report(&documented_facts(&opts)?)),
        Command::ExportDot { file, reticulation } => export_dot_cmd(file, *reticulation),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
