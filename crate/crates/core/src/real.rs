//! Serde helpers for reals in reports: finite values are rounded to 12
//! significant digits, non-finite values are written as the strings
//! `"Infinity"`, `"-Infinity"` and `"NaN"`.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().expect("formatted float parses")
}

/// Human-readable form of [`round_sig`]: exponent notation outside
/// `[1e-4, 1e12)`, `Infinity`/`-Infinity`/`NaN` for non-finite values.
pub fn display(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "Infinity".into() } else { "-Infinity".into() };
    }
    let r = round_sig(x);
    if r != 0.0 && (r.abs() < 1e-4 || r.abs() >= 1e12) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Num(f64),
    Str(String),
}

fn to_repr(x: f64) -> Repr {
    if x.is_nan() {
        Repr::Str("NaN".into())
    } else if x == f64::INFINITY {
        Repr::Str("Infinity".into())
    } else if x == f64::NEG_INFINITY {
        Repr::Str("-Infinity".into())
    } else {
        Repr::Num(round_sig(x))
    }
}

fn from_repr<E: serde::de::Error>(r: Repr) -> Result<f64, E> {
    match r {
        Repr::Num(x) => Ok(x),
        Repr::Str(s) => match s.as_str() {
            "NaN" => Ok(f64::NAN),
            "Infinity" | "inf" => Ok(f64::INFINITY),
            "-Infinity" | "-inf" => Ok(f64::NEG_INFINITY),
            other => Err(E::custom(format!("expected a number, got {other:?}"))),
        },
    }
}

pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    to_repr(*x).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    from_repr(Repr::deserialize(d)?)
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
        xs.iter().map(|&x| to_repr(x)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<f64>, D::Error> {
        Vec::<Repr>::deserialize(d)?.into_iter().map(from_repr).collect()
    }
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        x.map(to_repr).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        Option::<Repr>::deserialize(d)?.map(from_repr).transpose()
    }
}

/// Complex numbers as `[re, im]` pairs.
pub mod complex_vec {
    use super::*;

    pub fn serialize<S: Serializer>(zs: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        zs.iter().map(|z| [to_repr(z.re), to_repr(z.im)]).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        Vec::<[Repr; 2]>::deserialize(d)?
            .into_iter()
            .map(|[re, im]| Ok(Complex64::new(from_repr(re)?, from_repr(im)?)))
            .collect::<Result<_, D::Error>>()
            .map_err(|e: D::Error| D::Error::custom(e))
    }
}
