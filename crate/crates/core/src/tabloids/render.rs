use serde::{Deserialize, Serialize};

use crate::posets_graphs::Poset;

use super::{SrhGTabloid, SrhTabloid};

/// Serialized form of a (possibly filled) tabloid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TabloidJson {
    pub shape: Vec<usize>,
    pub hooks: Vec<Vec<[usize; 2]>>,
    pub sign: i8,
    pub content: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub filling: Option<Vec<(usize, usize, String)>>,
}

impl TabloidJson {
    pub fn from_tabloid(t: &SrhTabloid) -> Self {
        TabloidJson {
            shape: t.shape().parts().to_vec(),
            hooks: t
                .hooks()
                .iter()
                .map(|h| h.cells().iter().map(|&(r, c)| [r, c]).collect())
                .collect(),
            sign: t.sign(),
            content: t.content().parts().to_vec(),
            filling: None,
        }
    }

    pub fn from_filled(t: &SrhGTabloid, labels: &Poset) -> Self {
        let mut json = TabloidJson::from_tabloid(t.tabloid());
        let mut filling: Vec<(usize, usize, String)> = t
            .tabloid()
            .hooks()
            .iter()
            .zip(t.filling())
            .flat_map(|(h, f)| h.cells().iter().zip(f).map(|(&(r, c), &v)| (r, c, labels.label(v))))
            .collect();
        filling.sort();
        json.filling = Some(filling);
        json
    }
}

/// One character per box: hooks are lettered `a, b, c, ...` bottom to top.
/// With a filling, each box shows its vertex label instead, and the hook
/// letters are printed alongside.
pub fn render_ascii(t: &SrhTabloid, filled: Option<(&SrhGTabloid, &Poset)>) -> String {
    let shape = t.shape().parts();
    let mut letters: Vec<Vec<char>> = shape.iter().map(|&len| vec!['?'; len]).collect();
    for (i, hook) in t.hooks().iter().enumerate() {
        let letter = hook_letter(i);
        for &(r, c) in hook.cells() {
            letters[r - 1][c - 1] = letter;
        }
    }
    let sign = if t.sign() > 0 { '+' } else { '-' };
    let mut out = format!("sign {sign}1 content {}\n", t.content());
    for (row, line) in letters.iter().enumerate() {
        out.extend(line.iter());
        if let Some((g, labels)) = filled {
            let width = shape.first().copied().unwrap_or(0);
            out.push_str(&" ".repeat(width - line.len() + 2));
            let cells: Vec<String> = (1..=line.len())
                .map(|c| labels.label(g.vertex_at((row + 1, c)).expect("cell is filled")))
                .collect();
            out.push_str(&cells.join(" "));
        }
        out.push('\n');
    }
    out
}

fn hook_letter(i: usize) -> char {
    if i < 26 {
        (b'a' + i as u8) as char
    } else if i < 52 {
        (b'A' + (i - 26) as u8) as char
    } else {
        '#'
    }
}
