//! Text bargraphs. Column `i` holds `c_i` boxes; columns are paired
//! `(c_1, c_2), (c_3, c_4), …` and pair boundaries are drawn as `‖`.
//!
//! With a family context every box carries the image part it encodes:
//! rows shared by both columns of a pair are `2` (for `P≥k`) or one
//! even part `2m` (for `Q≤k`), excess boxes are `1` on the left column
//! and `1'` on the right, and a trailing unpaired column is all `1`.

use carlitz_arndt::Composition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Labels {
    None,
    /// Shared rows each become a part 2.
    Pell,
    /// Shared rows together become one even part.
    Q,
}

const CELL: usize = 2;

pub fn render(c: &Composition, labels: Labels) -> String {
    let h: Vec<u32> = c.values();
    let cols = h.len();
    let top = h.iter().copied().max().unwrap_or(0);
    let mut cells = vec![vec![String::new(); cols]; top as usize];
    for (i, &hi) in h.iter().enumerate() {
        for row in 0..hi {
            cells[row as usize][i] = label(&h, i, row, labels);
        }
    }
    let mut out = String::new();
    for row in (0..top).rev() {
        let has = |i: usize| h.get(i).is_some_and(|&v| v > row);
        let cells = &cells[row as usize];
        let mut line = String::new();
        for j in 0..=cols {
            let left = j > 0 && has(j - 1);
            let right = j < cols && has(j);
            let merged = j % 2 == 1 && left && right && labels != Labels::None;
            let sep = if (!left && !right) || merged {
                ' '
            } else if j % 2 == 0 && j > 0 && j < cols {
                '‖'
            } else {
                '|'
            };
            line.push(sep);
            if let Some(s) = cells.get(j) {
                line.push_str(s);
                let pad = CELL.saturating_sub(s.chars().count());
                line.extend(std::iter::repeat_n(' ', pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn label(h: &[u32], i: usize, row: u32, labels: Labels) -> String {
    if labels == Labels::None {
        return "##".into();
    }
    let mate = if i.is_multiple_of(2) { i + 1 } else { i - 1 };
    let Some(&other) = h.get(mate) else {
        return "1".into();
    };
    let shared = h[i].min(other);
    if row >= shared {
        return if i.is_multiple_of(2) { "1" } else { "1'" }.into();
    }
    if i % 2 == 1 {
        return String::new();
    }
    match labels {
        Labels::Q if row == (shared - 1) / 2 => (2 * shared).to_string(),
        Labels::Q => String::new(),
        _ => "2".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pell_labels() {
        let c: Composition = "5,2,1,3,1".parse().unwrap();
        let expected = "\
|1 |
|1 |
|1 |     |1'‖
|2    ‖  |1'‖
|2    ‖2    ‖1 |
";
        assert_eq!(render(&c, Labels::Pell), expected);
    }

    #[test]
    fn q_labels() {
        let c: Composition = "1,2,4,3,1,1,4".parse().unwrap();
        let out = render(&c, Labels::Q);
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows.len(), 4);
        assert!(rows[2].contains('6'));
        assert!(rows[3].starts_with("|2    ‖"));
        assert_eq!(out.matches("1'").count(), 1);
    }

    #[test]
    fn plain_boxes() {
        let c: Composition = "2,1".parse().unwrap();
        assert_eq!(render(&c, Labels::None), "|##|\n|##|##|\n");
    }
}
