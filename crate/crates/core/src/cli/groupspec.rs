//! Group specifier strings and group-element strings.
//!
//! ```text
//! z_n:N               Z_N phase representation with charges 0..N-1
//! z_n:N:c0,c1,...     Z_N phase representation with the given charges
//! regular:N           left regular representation of Z_N
//! group-file:PATH     left regular representation of a tabulated group
//! u1:n0,n1,...        U(1) with number operator diag(n0, n1, ...)
//! su2:J               spin-J representation (J = 1, 0.5 or 1/2, ...)
//! trivial:G:D         D-dimensional trivial representation of G, where G is
//!                     su2, u1, z_n:N, regular:N or group-file:PATH
//! tensor:A*B          tensor product; splits at the first '*'
//! ```

use std::f64::consts::PI;
use std::path::Path;

use crate::error::{Error, Result};
use crate::groups::{
    cyclic_group, cyclic_phase_representation, left_regular_representation, spin_j_representation,
    tensor_representation, u1_number_representation, FiniteGroup, GroupElement, GroupKind, Representation, Rotation,
};

use super::files::{read_json, GroupFile};

fn parse_err(spec: &str, why: impl std::fmt::Display) -> Error {
    Error::Parse(format!("group '{spec}': {why}"))
}

fn parse_usize(spec: &str, text: &str) -> Result<usize> {
    text.trim().parse().map_err(|_| parse_err(spec, format!("'{text}' is not a nonnegative integer")))
}

fn parse_list(spec: &str, text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| parse_err(spec, format!("'{t}' is not an integer"))))
        .collect()
}

/// Accepts `1`, `0.5`, `3/2`.
pub fn parse_spin(text: &str) -> Result<f64> {
    let t = text.trim();
    let value = match t.split_once('/') {
        Some((num, den)) => {
            let n: f64 = num.trim().parse().map_err(|_| Error::Parse(format!("bad spin '{t}'")))?;
            let d: f64 = den.trim().parse().map_err(|_| Error::Parse(format!("bad spin '{t}'")))?;
            n / d
        }
        None => t.parse().map_err(|_| Error::Parse(format!("bad spin '{t}'")))?,
    };
    Ok(value)
}

fn load_group(spec: &str, path: &str) -> Result<FiniteGroup> {
    if path.is_empty() {
        return Err(parse_err(spec, "missing path"));
    }
    read_json::<GroupFile>(Path::new(path), "group file")?.to_group()
}

fn parse_kind(spec: &str, text: &str) -> Result<GroupKind> {
    let (head, rest) = text.split_once(':').unwrap_or((text, ""));
    match head {
        "su2" if rest.is_empty() => Ok(GroupKind::Su2),
        "u1" if rest.is_empty() => Ok(GroupKind::U1),
        "z_n" | "regular" => Ok(GroupKind::Finite(cyclic_group(parse_usize(spec, rest)?)?)),
        "group-file" => Ok(GroupKind::Finite(load_group(spec, rest)?)),
        _ => Err(parse_err(spec, format!("unknown group '{text}'"))),
    }
}

pub fn parse_group(spec: &str) -> Result<Representation> {
    let (head, rest) = spec.split_once(':').ok_or_else(|| parse_err(spec, "expected KIND:ARGS"))?;
    match head {
        "z_n" => {
            let (n, charges) = match rest.split_once(':') {
                Some((n, c)) => (parse_usize(spec, n)?, parse_list(spec, c)?),
                None => {
                    let n = parse_usize(spec, rest)?;
                    (n, (0..n as i64).collect())
                }
            };
            cyclic_phase_representation(n, &charges)
        }
        "regular" => Ok(left_regular_representation(&cyclic_group(parse_usize(spec, rest)?)?)),
        "group-file" => Ok(left_regular_representation(&load_group(spec, rest)?)),
        "u1" => u1_number_representation(&parse_list(spec, rest)?),
        "su2" => spin_j_representation(parse_spin(rest)?),
        "trivial" => {
            let (group, dim) = rest.rsplit_once(':').ok_or_else(|| parse_err(spec, "expected trivial:GROUP:DIM"))?;
            Representation::trivial(parse_kind(spec, group)?, parse_usize(spec, dim)?)
        }
        "tensor" => {
            let (a, b) = rest.split_once('*').ok_or_else(|| parse_err(spec, "expected tensor:A*B"))?;
            tensor_representation(&parse_group(a)?, &parse_group(b)?)
        }
        _ => Err(parse_err(spec, format!("unknown kind '{head}'"))),
    }
}

/// Parses an element of the representation's group:
/// finite groups take an index or a label (`e` is the identity);
/// U(1) takes a phase; SU(2) takes `AXIS:ANGLE` with `AXIS` one of `x`, `y`,
/// `z` or `nx,ny,nz`, or `e`.
pub fn parse_element(rep: &Representation, text: &str) -> Result<GroupElement> {
    let t = text.trim();
    let bad = |why: &str| Error::Parse(format!("element '{t}': {why}"));
    if t == "e" {
        return Ok(rep.kind().identity_element());
    }
    match rep.kind() {
        GroupKind::Finite(g) => {
            if let Some(k) = g.index_of(t) {
                return Ok(GroupElement::Finite(k));
            }
            let k: usize = t.parse().map_err(|_| bad("not an element index or label"))?;
            if k >= g.order() {
                return Err(bad("index out of range"));
            }
            Ok(GroupElement::Finite(k))
        }
        GroupKind::U1 => Ok(GroupElement::Phase(parse_angle(t).ok_or_else(|| bad("expected a phase"))?)),
        GroupKind::Su2 => {
            let (axis, angle) = t.rsplit_once(':').ok_or_else(|| bad("expected AXIS:ANGLE"))?;
            let angle = parse_angle(angle).ok_or_else(|| bad("bad angle"))?;
            let axis = match axis {
                "x" => [1.0, 0.0, 0.0],
                "y" => [0.0, 1.0, 0.0],
                "z" => [0.0, 0.0, 1.0],
                other => {
                    let v: Vec<f64> = other
                        .split(',')
                        .map(|c| c.trim().parse::<f64>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| bad("bad axis"))?;
                    if v.len() != 3 {
                        return Err(bad("axis needs three components"));
                    }
                    [v[0], v[1], v[2]]
                }
            };
            Ok(GroupElement::Rotation(Rotation::axis_angle(axis, angle)?))
        }
    }
}

/// A float, optionally written as a multiple of pi (`pi`, `pi/2`, `0.5pi`).
fn parse_angle(text: &str) -> Option<f64> {
    let t = text.trim();
    if let Ok(x) = t.parse::<f64>() {
        return x.is_finite().then_some(x);
    }
    let (coef, den) = match t.split_once('/') {
        Some((a, b)) => (a, b.trim().parse::<f64>().ok()?),
        None => (t, 1.0),
    };
    let coef = coef.trim().strip_suffix("pi")?.trim();
    let c = if coef.is_empty() { 1.0 } else { coef.parse::<f64>().ok()? };
    Some(c * PI / den)
}
