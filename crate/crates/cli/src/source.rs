use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use reticulation::constructions::InductiveSystem;
use reticulation::io::{self, AlgebraDocument, AnyAlgebra};
use reticulation::{fixtures, FiniteAlgebra, FiniteBoundedLattice, FiniteResiduatedLattice, Kind, Morphism};

/// Resolves `arg` as a file, then as a file with `.alg` appended, then as the
/// name of a built-in fixture (the file stem is tried too, so
/// `fixtures/kowalski6` works from anywhere).
pub fn document(arg: &str) -> Result<AlgebraDocument> {
    let path = Path::new(arg);
    let with_ext = PathBuf::from(format!("{arg}.alg"));
    for p in [path, with_ext.as_path()] {
        if p.is_file() {
            return io::load(p).with_context(|| format!("cannot read {}", p.display()));
        }
    }
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(arg);
    for name in [arg, stem] {
        if let Some(a) = fixtures::builtin(name) {
            return Ok(AlgebraDocument::from_algebra(name, &a));
        }
    }
    bail!("no such file or built-in algebra: {arg}")
}

pub fn algebra(arg: &str) -> Result<(String, AnyAlgebra)> {
    let doc = document(arg)?;
    let a = doc.validate().with_context(|| format!("{} does not validate", doc.name))?;
    Ok((doc.name, a))
}

pub fn residuated(arg: &str) -> Result<(String, FiniteResiduatedLattice)> {
    let doc = document(arg)?;
    if doc.kind != Kind::ResiduatedLattice {
        bail!("{} is a bounded lattice; this command needs a residuated lattice", doc.name);
    }
    let a = doc.to_residuated().with_context(|| format!("{} does not validate", doc.name))?;
    Ok((doc.name, a))
}

pub enum AnySystem {
    Residuated(InductiveSystem<FiniteResiduatedLattice>),
    Lattice(InductiveSystem<FiniteBoundedLattice>),
}

fn build<T: FiniteAlgebra>(
    algebras: Vec<T>,
    labels: &[String],
    maps: &[(String, String, Vec<usize>)],
    kind: Kind,
) -> Result<InductiveSystem<T>> {
    let index = |l: &str| labels.iter().position(|x| x == l).expect("labels checked by the parser");
    let edges = maps
        .iter()
        .map(|(i, j, m)| (index(i), index(j), Morphism::new(kind, m.clone())))
        .collect();
    Ok(InductiveSystem::new(algebras, edges)?)
}

/// Loads a system file; `builtin:<name>` sources name fixtures, anything else
/// is a path relative to the system file.
pub fn system(arg: &str) -> Result<AnySystem> {
    let path = Path::new(arg);
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {arg}"))?;
    let sys = io::parse_system(&text).with_context(|| format!("cannot parse {arg}"))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let docs = sys
        .algebras
        .iter()
        .map(|(label, src)| match src.strip_prefix("builtin:") {
            Some(name) => fixtures::builtin(name)
                .map(|a| AlgebraDocument::from_algebra(name, &a))
                .with_context(|| format!("{label}: unknown built-in `{name}`")),
            None => io::load(dir.join(src)).with_context(|| format!("{label}: cannot read {src}")),
        })
        .collect::<Result<Vec<_>>>()?;
    let labels: Vec<String> = sys.algebras.iter().map(|(l, _)| l.clone()).collect();
    if docs.iter().all(|d| d.kind == Kind::ResiduatedLattice) {
        let algebras = docs.iter().map(|d| d.to_residuated()).collect::<reticulation::Result<Vec<_>>>()?;
        Ok(AnySystem::Residuated(build(algebras, &labels, &sys.maps, Kind::ResiduatedLattice)?))
    } else {
        let algebras = docs.iter().map(|d| d.to_lattice()).collect::<reticulation::Result<Vec<_>>>()?;
        Ok(AnySystem::Lattice(build(algebras, &labels, &sys.maps, Kind::BoundedLattice)?))
    }
}
