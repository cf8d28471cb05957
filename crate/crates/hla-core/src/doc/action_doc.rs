//! Parse and emit action documents: a module algebra together with the
//! four operator families of an action of a base algebra on it.

use super::algebra_doc::{algebra_blocks, build_algebra};
use super::raw::{parse_raw, RawEntry, RawSection};
use super::{enc_key, fill_operator, index_of, join_blocks, operator_lines, ParseError};
use crate::algebra::HomLieAntialgebra;
use crate::extensions::Action;

/// A parsed action: the module algebra and the operators over a base.
#[derive(Clone, Debug)]
pub struct ActionDocument {
    pub space: HomLieAntialgebra,
    pub action: Action,
}

pub fn parse_action(text: &str, base: &HomLieAntialgebra) -> Result<ActionDocument, ParseError> {
    let doc = parse_raw(text)?;
    if let Some(entry) = doc.root.first() {
        return Err(ParseError::at(
            entry.pos,
            "action documents have no top-level keys; start with [v]",
        ));
    }
    let mut space_root: &[RawEntry] = &[];
    let mut space_sections: Vec<(&[String], &RawSection)> = Vec::new();
    let mut rest: Vec<(&[String], &RawSection)> = Vec::new();
    for s in &doc.sections {
        if s.path[0] == "v" {
            if s.path.len() == 1 {
                space_root = &s.entries;
            } else {
                space_sections.push((&s.path[1..], s));
            }
        } else {
            rest.push((&s.path[..], s));
        }
    }
    let space = build_algebra(space_root, &space_sections)?;
    let v_even = space.basis().even_names();
    let v_odd = space.basis().odd_names();

    let mut action = Action::zero(base, &space);
    for (path, section) in rest {
        match path {
            [r, x, block] if r == "rho0" => {
                let i = index_of(base.basis().even_names(), x).ok_or_else(|| {
                    ParseError::at(section.pos, format!("unknown even name {x:?}"))
                })?;
                match block.as_str() {
                    "on_even" => fill_operator(
                        &mut action.rho0_even[i],
                        section,
                        v_even,
                        v_even,
                        "module even",
                        "module even",
                    )?,
                    "on_odd" => fill_operator(
                        &mut action.rho0_odd[i],
                        section,
                        v_odd,
                        v_odd,
                        "module odd",
                        "module odd",
                    )?,
                    _ => {
                        return Err(ParseError::at(
                            section.pos,
                            format!(
                                "unknown operator block {block:?}; expected \"on_even\" or \"on_odd\""
                            ),
                        ))
                    }
                }
            }
            [r, y, block] if r == "rho1" => {
                let j = index_of(base.basis().odd_names(), y).ok_or_else(|| {
                    ParseError::at(section.pos, format!("unknown odd name {y:?}"))
                })?;
                match block.as_str() {
                    "even_to_odd" => fill_operator(
                        &mut action.rho1_even_to_odd[j],
                        section,
                        v_even,
                        v_odd,
                        "module even",
                        "module odd",
                    )?,
                    "odd_to_even" => fill_operator(
                        &mut action.rho1_odd_to_even[j],
                        section,
                        v_odd,
                        v_even,
                        "module odd",
                        "module even",
                    )?,
                    _ => {
                        return Err(ParseError::at(
                            section.pos,
                            format!(
                                "unknown operator block {block:?}; expected \"even_to_odd\" or \"odd_to_even\""
                            ),
                        ))
                    }
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
    Ok(ActionDocument { space, action })
}

pub fn emit_action(base: &HomLieAntialgebra, space: &HomLieAntialgebra, action: &Action) -> String {
    let v_even = space.basis().even_names();
    let v_odd = space.basis().odd_names();
    let mut blocks = algebra_blocks(space, Some("v"));
    for (i, x) in base.basis().even_names().iter().enumerate() {
        for (block, m, input, output) in [
            ("on_even", &action.rho0_even[i], v_even, v_even),
            ("on_odd", &action.rho0_odd[i], v_odd, v_odd),
        ] {
            let lines = operator_lines(m, input, output);
            if !lines.is_empty() {
                blocks.push(
                    std::iter::once(format!("[rho0.{}.{block}]", enc_key(x)))
                        .chain(lines)
                        .collect(),
                );
            }
        }
    }
    for (j, y) in base.basis().odd_names().iter().enumerate() {
        for (block, m, input, output) in [
            ("even_to_odd", &action.rho1_even_to_odd[j], v_even, v_odd),
            ("odd_to_even", &action.rho1_odd_to_even[j], v_odd, v_even),
        ] {
            let lines = operator_lines(m, input, output);
            if !lines.is_empty() {
                blocks.push(
                    std::iter::once(format!("[rho1.{}.{block}]", enc_key(y)))
                        .chain(lines)
                        .collect(),
                );
            }
        }
    }
    join_blocks(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtins::k3;
    use crate::extensions::{adjoint_action, verify_action};
    use crate::scalar::int;

    #[test]
    fn adjoint_action_round_trips_exactly() {
        let a = k3(&int(2)).unwrap();
        let action = adjoint_action(&a);
        let text = emit_action(&a, &a, &action);
        let parsed = parse_action(&text, &a).unwrap();
        assert_eq!(parsed.space, a);
        assert_eq!(parsed.action, action);
        assert_eq!(emit_action(&a, &parsed.space, &parsed.action), text);
        assert!(verify_action(&a, &parsed.space, &parsed.action).unwrap().passed());
    }

    #[test]
    fn missing_operator_sections_mean_the_zero_action() {
        let a = k3(&int(2)).unwrap();
        let doc = "[v]\neven = [\"u\"]\nodd = []\n[v.alpha]\nu = { u = \"1\" }\n";
        let parsed = parse_action(doc, &a).unwrap();
        assert_eq!(parsed.action, Action::zero(&a, &parsed.space));
    }

    #[test]
    fn operator_errors_are_located() {
        let a = k3(&int(2)).unwrap();
        let head = "[v]\neven = [\"u\"]\nodd = []\n";

        let e = parse_action(&format!("{head}[rho0.zzz.on_even]\nu = {{ u = \"1\" }}\n"), &a)
            .unwrap_err();
        assert!(e.message.contains("unknown even name \"zzz\""), "{e}");

        let e = parse_action(&format!("{head}[rho0.eps.sideways]\nu = {{ u = \"1\" }}\n"), &a)
            .unwrap_err();
        assert!(e.message.contains("unknown operator block \"sideways\""), "{e}");

        let e = parse_action(&format!("{head}[rho1.eps.even_to_odd]\n"), &a).unwrap_err();
        assert!(e.message.contains("unknown odd name \"eps\""), "{e}");

        let e = parse_action(&format!("{head}[extras]\nk = \"1\"\n"), &a).unwrap_err();
        assert!(e.message.contains("unknown section [extras]"), "{e}");

        let e = parse_action(&format!("even = [\"u\"]\n{head}"), &a).unwrap_err();
        assert!(e.message.contains("start with [v]"), "{e}");
    }
}
