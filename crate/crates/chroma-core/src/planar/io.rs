use super::map::EmbeddedGraph;

/// Line-oriented graph file format. Keys may appear in any order; `#` starts
/// a comment. Darts are integers `0..darts`.
///
/// ```text
/// n_bottom 2
/// n_top 2
/// darts 6
/// alpha 0-4 1-5 2-3
/// sigma (4 5)
/// boundary 0 1 2 3
/// free_loops 0
/// isolated 0
/// ```
///
/// `sigma` lists nontrivial cycles; omitted darts are fixed points. The
/// `boundary` line lists stub darts bottom left to right then top right to
/// left. Rendering is normalized, so parse-render round-trips are bit-exact.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct GraphParseError {
    pub line: usize,
    pub msg: String,
}

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T, GraphParseError> {
    Err(GraphParseError { line, msg: msg.into() })
}

pub fn parse_graph(input: &str) -> Result<EmbeddedGraph, GraphParseError> {
    let mut n_bottom = None;
    let mut n_top = None;
    let mut darts: Option<usize> = None;
    let mut alpha_pairs: Vec<(usize, usize)> = Vec::new();
    let mut sigma_cycles: Vec<Vec<usize>> = Vec::new();
    let mut boundary: Option<Vec<usize>> = None;
    let mut free_loops = 0usize;
    let mut isolated = 0usize;
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        let parse_usize = |s: &str| -> Result<usize, GraphParseError> {
            s.parse().map_err(|_| GraphParseError {
                line: line_no,
                msg: format!("expected a nonnegative integer, found `{s}`"),
            })
        };
        match key {
            "n_bottom" => n_bottom = Some(parse_usize(rest)?),
            "n_top" => n_top = Some(parse_usize(rest)?),
            "darts" => darts = Some(parse_usize(rest)?),
            "alpha" => {
                for pair in rest.split_whitespace() {
                    let (a, b) = pair.split_once('-').ok_or(GraphParseError {
                        line: line_no,
                        msg: format!("expected `d1-d2` pair, found `{pair}`"),
                    })?;
                    alpha_pairs.push((parse_usize(a)?, parse_usize(b)?));
                }
            }
            "sigma" => {
                let mut rest = rest;
                while let Some(open) = rest.find('(') {
                    let close = rest[open..].find(')').ok_or(GraphParseError {
                        line: line_no,
                        msg: "unclosed sigma cycle".into(),
                    })? + open;
                    let mut cyc = Vec::new();
                    for tok in rest[open + 1..close].split_whitespace() {
                        cyc.push(parse_usize(tok)?);
                    }
                    if cyc.is_empty() {
                        return perr(line_no, "empty sigma cycle");
                    }
                    sigma_cycles.push(cyc);
                    rest = &rest[close + 1..];
                }
                if !rest.trim().is_empty() {
                    return perr(line_no, format!("trailing sigma tokens `{}`", rest.trim()));
                }
            }
            "boundary" => {
                let mut b = Vec::new();
                for tok in rest.split_whitespace() {
                    b.push(parse_usize(tok)?);
                }
                boundary = Some(b);
            }
            "free_loops" => free_loops = parse_usize(rest)?,
            "isolated" => isolated = parse_usize(rest)?,
            other => return perr(line_no, format!("unknown key `{other}`")),
        }
    }
    let m = match darts {
        Some(m) => m,
        None => return perr(input.lines().count(), "missing `darts` line"),
    };
    let boundary = boundary.unwrap_or_default();
    let n_bottom = n_bottom.unwrap_or(0);
    let n_top = n_top.unwrap_or(boundary.len().saturating_sub(n_bottom));
    let mut alpha = vec![usize::MAX; m];
    for (a, b) in alpha_pairs {
        if a >= m || b >= m {
            return perr(0, format!("alpha pair ({a},{b}) out of range"));
        }
        alpha[a] = b;
        alpha[b] = a;
    }
    if let Some(d) = alpha.iter().position(|&x| x == usize::MAX) {
        return perr(0, format!("dart {d} missing from alpha"));
    }
    let mut sigma: Vec<usize> = (0..m).collect();
    for cyc in sigma_cycles {
        for w in 0..cyc.len() {
            let d = cyc[w];
            if d >= m {
                return perr(0, format!("sigma dart {d} out of range"));
            }
            sigma[d] = cyc[(w + 1) % cyc.len()];
        }
    }
    let mut stub = vec![false; m];
    for &b in &boundary {
        if b >= m {
            return perr(0, format!("boundary dart {b} out of range"));
        }
        stub[b] = true;
    }
    let g = EmbeddedGraph {
        alpha,
        sigma,
        stub,
        n_bottom,
        n_top,
        boundary,
        free_loops,
        isolated,
    };
    g.validate().map_err(|e| GraphParseError { line: 0, msg: e.to_string() })?;
    Ok(g)
}

pub fn render_graph(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("n_bottom {}\n", g.n_bottom));
    out.push_str(&format!("n_top {}\n", g.n_top));
    out.push_str(&format!("darts {}\n", g.num_darts()));
    let pairs: Vec<String> = g
        .edges()
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect();
    out.push_str(&format!("alpha {}\n", pairs.join(" ")));
    let mut cycles = Vec::new();
    let mut seen = vec![false; g.num_darts()];
    for d in 0..g.num_darts() {
        if seen[d] {
            continue;
        }
        let mut cyc = vec![d];
        seen[d] = true;
        let mut x = g.sigma(d);
        while x != d {
            seen[x] = true;
            cyc.push(x);
            x = g.sigma(x);
        }
        if cyc.len() > 1 {
            cycles.push(format!(
                "({})",
                cyc.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
            ));
        }
    }
    out.push_str(&format!("sigma {}\n", cycles.join(" ")));
    out.push_str(&format!(
        "boundary {}\n",
        g.boundary.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    ));
    out.push_str(&format!("free_loops {}\n", g.free_loops));
    out.push_str(&format!("isolated {}\n", g.isolated));
    out
}

impl std::str::FromStr for EmbeddedGraph {
    type Err = GraphParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::MapBuilder;

    #[test]
    fn roundtrip_is_bit_exact() {
        let g = MapBuilder::new()
            .bottom([1, 2])
            .top([4, 5])
            .vertex([1, 3, 4])
            .vertex([5, 3, 2])
            .build()
            .unwrap();
        let text = render_graph(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(g, back);
        assert_eq!(render_graph(&back), text);
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let err = parse_graph("n_bottom 1\nfoo 3\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_graph("darts x\n").unwrap_err();
        assert_eq!(err.line, 1);
    }
}
