//! Parse and emit algebra documents: basis name lists, the two twists, and
//! the three product tables with symmetry completion.

use super::raw::{parse_raw, Pos, RawEntry, RawSection};
use super::{
    as_array, as_table, check_names, combination, enc_combination, enc_names, fill_operator,
    index_of, join_blocks, operator_lines, pair_key, split_pair, PairTable, ParseError,
};
use crate::algebra::{GradedBasis, HomLieAntialgebra};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use num_traits::Zero;
use std::collections::BTreeSet;

pub fn parse_algebra(text: &str) -> Result<HomLieAntialgebra, ParseError> {
    let doc = parse_raw(text)?;
    let sections: Vec<(&[String], &RawSection)> =
        doc.sections.iter().map(|s| (&s.path[..], s)).collect();
    build_algebra(&doc.root, &sections)
}

/// Build an algebra from root entries (`even`, `odd`) and sections whose
/// paths have already been stripped of any enclosing prefix.
pub(super) fn build_algebra(
    root: &[RawEntry],
    sections: &[(&[String], &RawSection)],
) -> Result<HomLieAntialgebra, ParseError> {
    let mut even_items: &[(String, Pos)] = &[];
    let mut odd_items: &[(String, Pos)] = &[];
    for entry in root {
        match entry.key.as_str() {
            "even" => even_items = as_array(entry)?,
            "odd" => odd_items = as_array(entry)?,
            _ => {
                return Err(ParseError::at(
                    entry.pos,
                    format!("unknown key {:?}; expected \"even\" or \"odd\"", entry.key),
                ))
            }
        }
    }
    let mut seen = BTreeSet::new();
    let even = check_names(even_items, &mut seen)?;
    let odd = check_names(odd_items, &mut seen)?;
    if even.is_empty() && odd.is_empty() {
        return Err(ParseError::at(
            Pos { line: 1, col: 1 },
            "document declares no basis vectors",
        ));
    }
    let (d0, d1) = (even.len(), odd.len());

    let mut alpha = Matrix::zero(d0, d0);
    let mut beta = Matrix::zero(d1, d1);
    let mut c00 = PairTable::new(d0, d0, false);
    let mut c11 = PairTable::new(d1, d0, true);
    let mut c01 = vec![Scalar::zero(); d0 * d1 * d1];
    let mut c01_seen: BTreeSet<(usize, usize)> = BTreeSet::new();

    for (path, section) in sections {
        let name = match path {
            [single] => single.as_str(),
            _ => {
                return Err(ParseError::at(
                    section.pos,
                    format!("unknown section [{}]", path.join(".")),
                ))
            }
        };
        match name {
            "alpha" => fill_operator(&mut alpha, section, &even, &even, "even", "even")?,
            "beta" => fill_operator(&mut beta, section, &odd, &odd, "odd", "odd")?,
            "product_even_even" => {
                for entry in &section.entries {
                    let (l, r) = split_pair(&entry.key, entry.pos)?;
                    let i = index_of(&even, &l).ok_or_else(|| {
                        ParseError::at(entry.pos, format!("unknown even name {l:?}"))
                    })?;
                    let j = index_of(&even, &r).ok_or_else(|| {
                        ParseError::at(entry.pos, format!("unknown even name {r:?}"))
                    })?;
                    let v = combination(as_table(entry)?, &even, "even")?;
                    c00.insert((i, &l), (j, &r), v, entry.pos)?;
                }
            }
            "product_even_odd" => {
                for entry in &section.entries {
                    let (l, r) = split_pair(&entry.key, entry.pos)?;
                    let i = index_of(&even, &l).ok_or_else(|| {
                        ParseError::at(entry.pos, format!("unknown even name {l:?}"))
                    })?;
                    let j = index_of(&odd, &r).ok_or_else(|| {
                        ParseError::at(entry.pos, format!("unknown odd name {r:?}"))
                    })?;
                    if !c01_seen.insert((i, j)) {
                        return Err(ParseError::at(
                            entry.pos,
                            format!("duplicate entry for ({l}, {r})"),
                        ));
                    }
                    let v = combination(as_table(entry)?, &odd, "odd")?;
                    for (k, x) in v.into_iter().enumerate() {
                        c01[(i * d1 + j) * d1 + k] = x;
                    }
                }
            }
            "bracket_odd_odd" => {
                for entry in &section.entries {
                    let (l, r) = split_pair(&entry.key, entry.pos)?;
                    let i = index_of(&odd, &l).ok_or_else(|| {
                        ParseError::at(entry.pos, format!("unknown odd name {l:?}"))
                    })?;
                    let j = index_of(&odd, &r).ok_or_else(|| {
                        ParseError::at(entry.pos, format!("unknown odd name {r:?}"))
                    })?;
                    let v = combination(as_table(entry)?, &even, "even")?;
                    c11.insert((i, &l), (j, &r), v, entry.pos)?;
                }
            }
            _ => {
                return Err(ParseError::at(
                    section.pos,
                    format!("unknown section [{}]", path.join(".")),
                ))
            }
        }
    }

    let basis = GradedBasis::new(even, odd).expect("names validated above");
    Ok(HomLieAntialgebra::new(basis, c00.data, c01, c11.data, alpha, beta)
        .expect("completed tables satisfy the structure symmetries"))
}



pub fn emit_algebra(a: &HomLieAntialgebra) -> String {
    join_blocks(algebra_blocks(a, None))
}

/// Document blocks for an algebra, optionally nested under a section prefix.
pub(super) fn algebra_blocks(a: &HomLieAntialgebra, prefix: Option<&str>) -> Vec<Vec<String>> {
    let b = a.basis();
    let header = |name: &str| match prefix {
        Some(p) => format!("[{p}.{name}]"),
        None => format!("[{name}]"),
    };

    let mut head = Vec::new();
    if let Some(p) = prefix {
        head.push(format!("[{p}]"));
    }
    head.push(format!("even = {}", enc_names(b.even_names())));
    head.push(format!("odd = {}", enc_names(b.odd_names())));

    let mut blocks = vec![head];
    let alpha = operator_lines(a.alpha(), b.even_names(), b.even_names());
    if !alpha.is_empty() {
        blocks.push(std::iter::once(header("alpha")).chain(alpha).collect());
    }
    let beta = operator_lines(a.beta(), b.odd_names(), b.odd_names());
    if !beta.is_empty() {
        blocks.push(std::iter::once(header("beta")).chain(beta).collect());
    }

    let mut lines = Vec::new();
    for i in 0..a.dim_even() {
        for j in i..a.dim_even() {
            if let Some(val) = enc_combination(&a.basis_mul_ee(i, j), b.even_names()) {
                lines.push(format!("{} = {}", pair_key(b.even_name(i), b.even_name(j)), val));
            }
        }
    }
    if !lines.is_empty() {
        blocks.push(std::iter::once(header("product_even_even")).chain(lines).collect());
    }

    let mut lines = Vec::new();
    for i in 0..a.dim_even() {
        for j in 0..a.dim_odd() {
            if let Some(val) = enc_combination(&a.basis_mul_eo(i, j), b.odd_names()) {
                lines.push(format!("{} = {}", pair_key(b.even_name(i), b.odd_name(j)), val));
            }
        }
    }
    if !lines.is_empty() {
        blocks.push(std::iter::once(header("product_even_odd")).chain(lines).collect());
    }

    let mut lines = Vec::new();
    for i in 0..a.dim_odd() {
        for j in (i + 1)..a.dim_odd() {
            if let Some(val) = enc_combination(&a.basis_bracket(i, j), b.even_names()) {
                lines.push(format!("{} = {}", pair_key(b.odd_name(i), b.odd_name(j)), val));
            }
        }
    }
    if !lines.is_empty() {
        blocks.push(std::iter::once(header("bracket_odd_odd")).chain(lines).collect());
    }
    blocks
}
