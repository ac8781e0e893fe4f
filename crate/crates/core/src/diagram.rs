//! ASCII plots of permutations: one column per position, highest value on top.

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const POINT: char = '●';
pub const HIGHLIGHT: char = '○';
pub const BLANK: char = '·';

/// Render `p` as an `n × n` grid. `highlight` holds 1-based positions drawn
/// as open dots.
pub fn render_diagram(p: &Permutation, highlight: &[usize]) -> Result<String> {
    let n = p.len();
    if let Some(&position) = highlight.iter().find(|&&i| i == 0 || i > n) {
        return Err(Error::PositionOutOfRange { position, len: n });
    }
    let mut out = String::new();
    for value in (1..=n as u32).rev() {
        let row: Vec<String> = p
            .values()
            .iter()
            .enumerate()
            .map(|(i, &v)| match (v == value, highlight.contains(&(i + 1))) {
                (true, true) => HIGHLIGHT,
                (true, false) => POINT,
                _ => BLANK,
            })
            .map(String::from)
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    Ok(out)
}
