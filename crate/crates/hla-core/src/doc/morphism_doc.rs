//! Parse and emit morphism documents: the two grade blocks of a linear
//! map between two given algebras, written column by column.

use super::raw::parse_raw;
use super::{fill_operator, join_blocks, operator_lines, ParseError};
use crate::algebra::HomLieAntialgebra;
use crate::matrix::Matrix;
use crate::morphism::GradedMorphism;

pub fn parse_morphism(
    text: &str,
    source: &HomLieAntialgebra,
    target: &HomLieAntialgebra,
) -> Result<GradedMorphism, ParseError> {
    let doc = parse_raw(text)?;
    if let Some(entry) = doc.root.first() {
        return Err(ParseError::at(
            entry.pos,
            "morphism documents have no top-level keys; start with [f0]",
        ));
    }
    let mut f0 = Matrix::zero(target.dim_even(), source.dim_even());
    let mut f1 = Matrix::zero(target.dim_odd(), source.dim_odd());
    for s in &doc.sections {
        match &s.path[..] {
            [name] if name == "f0" => fill_operator(
                &mut f0,
                s,
                source.basis().even_names(),
                target.basis().even_names(),
                "source even",
                "target even",
            )?,
            [name] if name == "f1" => fill_operator(
                &mut f1,
                s,
                source.basis().odd_names(),
                target.basis().odd_names(),
                "source odd",
                "target odd",
            )?,
            path => {
                return Err(ParseError::at(
                    s.pos,
                    format!("unknown section [{}]", path.join(".")),
                ))
            }
        }
    }
    Ok(GradedMorphism::new(f0, f1))
}

pub fn emit_morphism(
    m: &GradedMorphism,
    source: &HomLieAntialgebra,
    target: &HomLieAntialgebra,
) -> String {
    let mut blocks = Vec::new();
    let lines = operator_lines(&m.f0, source.basis().even_names(), target.basis().even_names());
    if !lines.is_empty() {
        blocks.push(std::iter::once("[f0]".to_string()).chain(lines).collect());
    }
    let lines = operator_lines(&m.f1, source.basis().odd_names(), target.basis().odd_names());
    if !lines.is_empty() {
        blocks.push(std::iter::once("[f1]".to_string()).chain(lines).collect());
    }
    join_blocks(blocks)
}
