//! Canonical ordering of vertex labels.
//!
//! Labels sort by their non-numeric prefix, then by the value of a trailing
//! run of digits, so `x2 < x10 < y1`.

use std::cmp::Ordering;

fn split(label: &str) -> (&str, &str) {
    let cut = label
        .char_indices()
        .rev()
        .take_while(|(_, c)| c.is_ascii_digit())
        .last()
        .map_or(label.len(), |(i, _)| i);
    label.split_at(cut)
}

pub fn label_cmp(a: &str, b: &str) -> Ordering {
    let (pa, da) = split(a);
    let (pb, db) = split(b);
    pa.cmp(pb)
        .then_with(|| {
            let ta = da.trim_start_matches('0');
            let tb = db.trim_start_matches('0');
            (!da.is_empty(), ta.len(), ta).cmp(&(!db.is_empty(), tb.len(), tb))
        })
        .then_with(|| a.cmp(b))
}

/// Labels may not be empty, contain whitespace, or contain the separators
/// used by the text formats.
pub fn check_label(label: &str) -> bool {
    !label.is_empty()
        && label != "∅"
        && label != "empty"
        && !label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ',' | '|' | '#' | ':'))
}
