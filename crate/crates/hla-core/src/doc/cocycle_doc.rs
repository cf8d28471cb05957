//! Parse and emit cocycle documents (a coefficient space plus a 2-cochain
//! against a given base algebra) and extension bundles (a base algebra
//! together with such a cocycle in one file).

use super::algebra_doc::{algebra_blocks, build_algebra};
use super::raw::{parse_raw, Pos, RawEntry, RawSection};
use super::{
    as_array, as_table, check_names, combination, enc_combination, enc_names, fill_operator,
    index_of, join_blocks, operator_lines, pair_key, split_pair, PairTable, ParseError,
};
use crate::algebra::{GradedBasis, HomLieAntialgebra};
use crate::cocycle::{CoeffSpace, Cocycle2};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use num_traits::Zero;
use std::collections::BTreeSet;

/// A parsed cocycle: the coefficient space and the 2-cochain over a base.
#[derive(Clone, Debug)]
pub struct CocycleDocument {
    pub kernel: CoeffSpace,
    pub cocycle: Cocycle2,
}

/// A parsed extension bundle: base algebra, kernel space, and cocycle.
#[derive(Clone, Debug)]
pub struct ExtensionDocument {
    pub base: HomLieAntialgebra,
    pub kernel: CoeffSpace,
    pub cocycle: Cocycle2,
}

pub fn parse_cocycle(
    text: &str,
    base: &HomLieAntialgebra,
) -> Result<CocycleDocument, ParseError> {
    let doc = parse_raw(text)?;
    if let Some(entry) = doc.root.first() {
        return Err(ParseError::at(
            entry.pos,
            "cocycle documents have no top-level keys; start with [kernel]",
        ));
    }
    let sections: Vec<(&[String], &RawSection)> =
        doc.sections.iter().map(|s| (&s.path[..], s)).collect();
    build_cocycle(&sections, base)
}

pub fn parse_extension(text: &str) -> Result<ExtensionDocument, ParseError> {
    let doc = parse_raw(text)?;
    if let Some(entry) = doc.root.first() {
        return Err(ParseError::at(
            entry.pos,
            "extension documents have no top-level keys; start with [base]",
        ));
    }
    let mut base_root: &[RawEntry] = &[];
    let mut base_sections: Vec<(&[String], &RawSection)> = Vec::new();
    let mut rest: Vec<(&[String], &RawSection)> = Vec::new();
    for s in &doc.sections {
        if s.path[0] == "base" {
            if s.path.len() == 1 {
                base_root = &s.entries;
            } else {
                base_sections.push((&s.path[1..], s));
            }
        } else {
            rest.push((&s.path[..], s));
        }
    }
    let base = build_algebra(base_root, &base_sections)?;
    let CocycleDocument { kernel, cocycle } = build_cocycle(&rest, &base)?;
    Ok(ExtensionDocument { base, kernel, cocycle })
}

fn build_cocycle(
    sections: &[(&[String], &RawSection)],
    base: &HomLieAntialgebra,
) -> Result<CocycleDocument, ParseError> {
    let (d0, d1) = (base.dim_even(), base.dim_odd());
    let base_even = base.basis().even_names();
    let base_odd = base.basis().odd_names();

    // First pass: the kernel basis, needed to size everything else.
    let mut even_items: &[(String, Pos)] = &[];
    let mut odd_items: &[(String, Pos)] = &[];
    for (path, section) in sections {
        if path.len() == 1 && path[0] == "kernel" {
            for entry in &section.entries {
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
        }
    }
    let mut seen = BTreeSet::new();
    let even = check_names(even_items, &mut seen)?;
    let odd = check_names(odd_items, &mut seen)?;
    let (p0, p1) = (even.len(), odd.len());

    let mut alpha = Matrix::zero(p0, p0);
    let mut beta = Matrix::zero(p1, p1);
    let mut w0 = PairTable::new(d0, p0, false);
    let mut w2 = PairTable::new(d1, p0, true);
    let mut w1 = vec![Scalar::zero(); d0 * d1 * p1];
    let mut w1_seen: BTreeSet<(usize, usize)> = BTreeSet::new();

    for (path, section) in sections {
        match path {
            [k] if k == "kernel" => {}
            [k, t] if k == "kernel" && t == "alpha" => {
                fill_operator(&mut alpha, section, &even, &even, "kernel even", "kernel even")?
            }
            [k, t] if k == "kernel" && t == "beta" => {
                fill_operator(&mut beta, section, &odd, &odd, "kernel odd", "kernel odd")?
            }
            [w] if w == "w0" => {
                for entry in &section.entries {
                    let (l, r) = split_pair(&entry.key, entry.pos)?;
                    let i = index_of(base_even, &l).ok_or_else(|| {
                        ParseError::at(entry.pos, format!("unknown even name {l:?}"))
                    })?;
                    let j = index_of(base_even, &r).ok_or_else(|| {
                        ParseError::at(entry.pos, format!("unknown even name {r:?}"))
                    })?;
                    let v = combination(as_table(entry)?, &even, "kernel even")?;
                    w0.insert((i, &l), (j, &r), v, entry.pos)?;
                }
            }
            [w] if w == "w1" => {
                for entry in &section.entries {
                    let (l, r) = split_pair(&entry.key, entry.pos)?;
                    let i = index_of(base_even, &l).ok_or_else(|| {
                        ParseError::at(entry.pos, format!("unknown even name {l:?}"))
                    })?;
                    let j = index_of(base_odd, &r).ok_or_else(|| {
                        ParseError::at(entry.pos, format!("unknown odd name {r:?}"))
                    })?;
                    if !w1_seen.insert((i, j)) {
                        return Err(ParseError::at(
                            entry.pos,
                            format!("duplicate entry for ({l}, {r})"),
                        ));
                    }
                    let v = combination(as_table(entry)?, &odd, "kernel odd")?;
                    for (k, x) in v.into_iter().enumerate() {
                        w1[(i * d1 + j) * p1 + k] = x;
                    }
                }
            }
            [w] if w == "w2" => {
                for entry in &section.entries {
                    let (l, r) = split_pair(&entry.key, entry.pos)?;
                    let i = index_of(base_odd, &l).ok_or_else(|| {
                        ParseError::at(entry.pos, format!("unknown odd name {l:?}"))
                    })?;
                    let j = index_of(base_odd, &r).ok_or_else(|| {
                        ParseError::at(entry.pos, format!("unknown odd name {r:?}"))
                    })?;
                    let v = combination(as_table(entry)?, &even, "kernel even")?;
                    w2.insert((i, &l), (j, &r), v, entry.pos)?;
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
    let kernel = CoeffSpace::new(basis, alpha, beta).expect("twist shapes match by construction");
    let cocycle = Cocycle2::new(base, &kernel, w0.data, w1, w2.data)
        .expect("completed blocks satisfy the cochain symmetries");
    Ok(CocycleDocument { kernel, cocycle })
}

pub fn emit_cocycle(base: &HomLieAntialgebra, kernel: &CoeffSpace, w: &Cocycle2) -> String {
    join_blocks(cocycle_blocks(base, kernel, w))
}

pub fn emit_extension(base: &HomLieAntialgebra, kernel: &CoeffSpace, w: &Cocycle2) -> String {
    let mut blocks = algebra_blocks(base, Some("base"));
    blocks.extend(cocycle_blocks(base, kernel, w));
    join_blocks(blocks)
}

fn cocycle_blocks(
    base: &HomLieAntialgebra,
    kernel: &CoeffSpace,
    w: &Cocycle2,
) -> Vec<Vec<String>> {
    let b = base.basis();
    let kb = kernel.basis();
    let mut blocks = vec![vec![
        "[kernel]".to_string(),
        format!("even = {}", enc_names(kb.even_names())),
        format!("odd = {}", enc_names(kb.odd_names())),
    ]];
    let alpha = operator_lines(kernel.alpha(), kb.even_names(), kb.even_names());
    if !alpha.is_empty() {
        blocks.push(std::iter::once("[kernel.alpha]".to_string()).chain(alpha).collect());
    }
    let beta = operator_lines(kernel.beta(), kb.odd_names(), kb.odd_names());
    if !beta.is_empty() {
        blocks.push(std::iter::once("[kernel.beta]".to_string()).chain(beta).collect());
    }

    let mut lines = Vec::new();
    for i in 0..base.dim_even() {
        for j in i..base.dim_even() {
            if let Some(val) = enc_combination(w.w0(i, j), kb.even_names()) {
                lines.push(format!("{} = {}", pair_key(b.even_name(i), b.even_name(j)), val));
            }
        }
    }
    if !lines.is_empty() {
        blocks.push(std::iter::once("[w0]".to_string()).chain(lines).collect());
    }

    let mut lines = Vec::new();
    for i in 0..base.dim_even() {
        for j in 0..base.dim_odd() {
            if let Some(val) = enc_combination(w.w1(i, j), kb.odd_names()) {
                lines.push(format!("{} = {}", pair_key(b.even_name(i), b.odd_name(j)), val));
            }
        }
    }
    if !lines.is_empty() {
        blocks.push(std::iter::once("[w1]".to_string()).chain(lines).collect());
    }

    let mut lines = Vec::new();
    for i in 0..base.dim_odd() {
        for j in (i + 1)..base.dim_odd() {
            if let Some(val) = enc_combination(w.w2(i, j), kb.even_names()) {
                lines.push(format!("{} = {}", pair_key(b.odd_name(i), b.odd_name(j)), val));
            }
        }
    }
    if !lines.is_empty() {
        blocks.push(std::iter::once("[w2]".to_string()).chain(lines).collect());
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtins::{exe02, k3};
    use crate::cocycle::{exe02_kernel_and_cocycle, is_cocycle};
    use crate::extensions::central_extension_from_cocycle;
    use crate::scalar::int;

    const EXE02_COC: &str = r#"
[kernel]
even = []
odd = ["z"]

[kernel.beta]
z = { z = "2" }

[w1]
"eps,a1" = { z = "2" }
"#;

    #[test]
    fn exe02_cocycle_document_matches_the_builtin() {
        let a = exe02(&int(2)).unwrap();
        let parsed = parse_cocycle(EXE02_COC, &a).unwrap();
        let (kernel, cocycle) = exe02_kernel_and_cocycle(&a, &int(2));
        assert_eq!(parsed.kernel.basis().odd_names(), kernel.basis().odd_names());
        assert_eq!(parsed.kernel.beta(), kernel.beta());
        assert_eq!(parsed.cocycle, cocycle);
        assert!(is_cocycle(&a, &parsed.kernel, &parsed.cocycle).unwrap().passed());
    }

    #[test]
    fn cocycle_round_trip_is_exact() {
        let a = exe02(&int(2)).unwrap();
        let (kernel, cocycle) = exe02_kernel_and_cocycle(&a, &int(2));
        let text = emit_cocycle(&a, &kernel, &cocycle);
        let back = parse_cocycle(&text, &a).unwrap();
        assert_eq!(back.cocycle, cocycle);
        assert_eq!(back.kernel.basis(), kernel.basis());
        assert_eq!(emit_cocycle(&a, &back.kernel, &back.cocycle), text);
    }

    #[test]
    fn extension_document_builds_the_four_dimensional_algebra() {
        let a = exe02(&int(2)).unwrap();
        let (kernel, cocycle) = exe02_kernel_and_cocycle(&a, &int(2));
        let text = emit_extension(&a, &kernel, &cocycle);
        let parsed = parse_extension(&text).unwrap();
        assert_eq!(parsed.base, a);
        assert_eq!(parsed.cocycle, cocycle);
        let e = central_extension_from_cocycle(&parsed.base, &parsed.kernel, &parsed.cocycle)
            .unwrap();
        assert_eq!(e.total.dim_odd(), 3);
        assert_eq!(e.total.format_odd(&e.total.basis_mul_eo(0, 0)), "2*z");
    }

    #[test]
    fn w0_symmetric_completion_and_contradiction() {
        let a = k3(&int(2)).unwrap();
        let doc = "[kernel]\neven = [\"u\"]\n[w0]\n\"eps,eps\" = { u = \"3\" }\n";
        let parsed = parse_cocycle(doc, &a).unwrap();
        assert_eq!(parsed.cocycle.w0(0, 0), &[int(3)]);

        let a2 = exe02(&int(2)).unwrap();
        let bad = "[kernel]\nodd = [\"z\"]\n[w1]\n\"eps,a1\" = { z = \"1\" }\n\"eps, a1\" = { z = \"1\" }\n";
        let e = parse_cocycle(bad, &a2).unwrap_err();
        assert!(e.message.contains("duplicate entry"), "{e}");
    }

    #[test]
    fn kernel_names_may_not_shadow_nothing_but_must_be_known() {
        let a = exe02(&int(2)).unwrap();
        let bad = "[kernel]\nodd = [\"z\"]\n[w1]\n\"eps,a9\" = { z = \"1\" }\n";
        let e = parse_cocycle(bad, &a).unwrap_err();
        assert!(e.message.contains("unknown odd name \"a9\""), "{e}");

        let bad = "[kernel]\nodd = [\"z\"]\n[w1]\n\"eps,a1\" = { q = \"1\" }\n";
        let e = parse_cocycle(bad, &a).unwrap_err();
        assert!(e.message.contains("unknown kernel odd name \"q\""), "{e}");
    }

    #[test]
    fn empty_kernel_parses() {
        let a = k3(&int(2)).unwrap();
        let parsed = parse_cocycle("[kernel]\neven = []\nodd = []\n", &a).unwrap();
        assert_eq!(parsed.kernel.dim_even(), 0);
        assert_eq!(parsed.kernel.dim_odd(), 0);
        assert!(parsed.cocycle.is_zero());
    }

    #[test]
    fn top_level_keys_are_rejected() {
        let a = k3(&int(2)).unwrap();
        let e = parse_cocycle("even = [\"u\"]\n", &a).unwrap_err();
        assert!(e.message.contains("start with [kernel]"), "{e}");

        let e = parse_extension("even = [\"u\"]\n").unwrap_err();
        assert!(e.message.contains("start with [base]"), "{e}");
    }

    #[test]
    fn missing_base_is_an_error() {
        let e = parse_extension("[kernel]\nodd = [\"z\"]\n").unwrap_err();
        assert!(e.message.contains("no basis vectors"), "{e}");
    }
}
