//! Named built-in algebras for the CLI and manifests.
//!
//! Fixed names: `trivial`, `s2` (the eight-element completely simple
//! non-orthodox example), the groups `c2 c3 c4 c5 c6 c2xc2 s3 d4 q8`, and
//! `null_2` (two elements, all products 0). Parameterized families:
//! `left_zero_N`, `right_zero_N`, `rect_band_MxK`. Any name may carry a
//! `+0` suffix (repeatable) adjoining a zero element.

use semikit_core::{
    adjoin_zero, builtin_group, cyclic_group, left_zero, rectangular_band, rees_matrix,
    right_zero, s2, trivial, FiniteSemigroup,
};

/// Names accepted verbatim (families and the `+0` suffix come on top).
pub const FIXED_NAMES: [&str; 12] = [
    "trivial", "s2", "c2", "c3", "c4", "c5", "c6", "c2xc2", "s3", "d4", "q8", "null_2",
];

#[derive(Debug, PartialEq, Eq)]
pub struct UnknownBuiltin(pub String);

impl std::fmt::Display for UnknownBuiltin {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "unknown builtin {:?}; known: {}, left_zero_N, right_zero_N, rect_band_MxK, any +0 suffix",
            self.0,
            FIXED_NAMES.join(", ")
        )
    }
}

impl std::error::Error for UnknownBuiltin {}

pub fn builtin_semigroup(name: &str) -> Result<FiniteSemigroup, UnknownBuiltin> {
    if let Some(rest) = name.strip_suffix("+0") {
        return Ok(adjoin_zero(&builtin_semigroup(rest)?));
    }
    if let Some(n) = parse_family(name, "left_zero_") {
        return Ok(left_zero(n));
    }
    if let Some(n) = parse_family(name, "right_zero_") {
        return Ok(right_zero(n));
    }
    if let Some(rest) = name.strip_prefix("rect_band_") {
        if let Some((m, k)) = rest.split_once('x') {
            if let (Ok(m), Ok(k)) = (m.parse::<usize>(), k.parse::<usize>()) {
                if m >= 1 && k >= 1 {
                    return Ok(rectangular_band(m, k));
                }
            }
        }
        return Err(UnknownBuiltin(name.into()));
    }
    match name {
        "trivial" => Ok(trivial()),
        "s2" => Ok(rees_matrix(&s2())),
        "null_2" => Ok(FiniteSemigroup::new(2, vec![0, 0, 0, 0]).expect("constant table")),
        _ => builtin_group(name)
            .map(|g| g.into_underlying())
            .or_else(|_| match parse_family(name, "c") {
                Some(n) => Ok(cyclic_group(n).into_underlying()),
                None => Err(UnknownBuiltin(name.into())),
            }),
    }
}

fn parse_family(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&n| n >= 1)
}
