//! Graph inputs: edge-list files, stdin and generator specs.

use std::collections::BTreeMap;
use std::io::Read as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use slopeforge::graph::{
    make_complete, make_complete_multipartite, make_cycle, make_grid, make_path, make_petersen, make_random_tree,
    parse_graph,
};
use slopeforge::Graph;

pub const FAMILIES: &[&str] = &["complete", "multipartite", "path", "cycle", "tree-random", "grid", "petersen"];

/// Positional values and `key=value` pairs of a generator call.
struct Params {
    positional: Vec<String>,
    named: BTreeMap<String, String>,
}

pub fn canonical_key(k: &str) -> String {
    match k {
        "Δ" | "D" | "delta" | "degree" | "maxdeg" => "degree".into(),
        "ε" | "eps" | "epsilon" => "epsilon".into(),
        "parts" | "sizes" => "sizes".into(),
        other => other.to_lowercase(),
    }
}

impl Params {
    fn new(tokens: &[String]) -> Self {
        let mut positional = Vec::new();
        let mut named = BTreeMap::new();
        for t in tokens {
            match t.split_once('=') {
                Some((k, v)) => {
                    named.insert(canonical_key(k.trim()), v.trim().to_string());
                }
                None => positional.push(t.clone()),
            }
        }
        Params { positional, named }
    }

    /// Named value `key`, else positional slot `slot`.
    fn raw(&self, key: &str, slot: usize) -> Option<&str> {
        self.named.get(key).map(String::as_str).or_else(|| self.positional.get(slot).map(String::as_str))
    }

    fn usize(&self, key: &str, slot: usize) -> Result<usize> {
        let v = self.raw(key, slot).with_context(|| format!("missing parameter {key}"))?;
        v.parse().with_context(|| format!("bad value {v:?} for {key}"))
    }

    fn check_unused(&self, keys: &[&str], slots: usize) -> Result<()> {
        if let Some(k) = self.named.keys().find(|k| !keys.contains(&k.as_str())) {
            bail!("unknown parameter {k}");
        }
        if self.positional.len() > slots {
            bail!("too many parameters: {}", self.positional[slots..].join(" "));
        }
        Ok(())
    }
}

fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|x| x.trim().parse().with_context(|| format!("bad part size {x:?}"))).collect()
}

/// Build a graph from a family name and its parameters. `seed` is used by
/// random families unless a `seed=` parameter overrides it.
pub fn generate(family: &str, tokens: &[String], seed: u64) -> Result<Graph> {
    let p = Params::new(tokens);
    let g = match family {
        "complete" => {
            p.check_unused(&["n"], 1)?;
            make_complete(p.usize("n", 0)?)?
        }
        "multipartite" => {
            p.check_unused(&["sizes"], usize::MAX)?;
            let sizes = match p.named.get("sizes") {
                Some(s) => parse_sizes(s)?,
                None if !p.positional.is_empty() => parse_sizes(&p.positional.join(","))?,
                None => bail!("missing part sizes, e.g. 4,4"),
            };
            make_complete_multipartite(&sizes)?
        }
        "path" => {
            p.check_unused(&["n"], 1)?;
            make_path(p.usize("n", 0)?)?
        }
        "cycle" => {
            p.check_unused(&["n"], 1)?;
            make_cycle(p.usize("n", 0)?)?
        }
        "grid" => {
            p.check_unused(&["rows", "cols"], 2)?;
            match p.positional.first().and_then(|s| s.split_once('x')) {
                Some((r, c)) if p.positional.len() == 1 => {
                    make_grid(r.parse().context("bad row count")?, c.parse().context("bad column count")?)?
                }
                _ => make_grid(p.usize("rows", 0)?, p.usize("cols", 1)?)?,
            }
        }
        "tree-random" => {
            p.check_unused(&["n", "degree", "seed"], 3)?;
            let seed = match p.raw("seed", 2) {
                Some(s) => s.parse().with_context(|| format!("bad seed {s:?}"))?,
                None => seed,
            };
            make_random_tree(p.usize("n", 0)?, p.usize("degree", 1)?, seed)?
        }
        "petersen" => {
            p.check_unused(&[], 0)?;
            make_petersen()
        }
        other => bail!("unknown family {other:?}; expected one of {}", FAMILIES.join(", ")),
    };
    Ok(g)
}

/// Shorthands `K_8`, `K_3,4`, `P_9`, `C_5` and `petersen`.
fn shorthand(s: &str) -> Option<(&'static str, Vec<String>)> {
    if s.eq_ignore_ascii_case("petersen") {
        return Some(("petersen", Vec::new()));
    }
    let (head, rest) = s.split_once('_')?;
    let rest = rest.trim_matches(|c| c == '{' || c == '}');
    let family = match head {
        "K" if rest.contains(',') => "multipartite",
        "K" => "complete",
        "P" => "path",
        "C" => "cycle",
        _ => return None,
    };
    Some((family, vec![rest.to_string()]))
}

/// A generator spec: `family params...` or a shorthand.
pub fn from_spec(spec: &str, seed: u64) -> Result<Graph> {
    let tokens: Vec<String> = spec.split_whitespace().map(str::to_string).collect();
    let Some(first) = tokens.first() else { bail!("empty generator spec") };
    if tokens.len() == 1 {
        if let Some((family, params)) = shorthand(first) {
            return generate(family, &params, seed);
        }
    }
    generate(first, &tokens[1..], seed)
}

pub fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn read_graph_file(path: &Path) -> Result<Graph> {
    parse_graph(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// A positional graph argument: an existing file, `-`, or a shorthand.
pub fn resolve(graph: Option<&str>, spec: Option<&str>, seed: u64) -> Result<Graph> {
    match (graph, spec) {
        (Some(_), Some(_)) => bail!("give either a graph file or --gen, not both"),
        (None, None) => bail!("no input graph: give a file or --gen SPEC"),
        (None, Some(s)) => from_spec(s, seed),
        (Some(g), None) => {
            let path = Path::new(g);
            if g == "-" || path.exists() {
                return read_graph_file(path);
            }
            match shorthand(g) {
                Some((family, params)) => generate(family, &params, seed),
                None => bail!("{g}: no such file"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthands() {
        assert_eq!(from_spec("K_8", 0).unwrap().m(), 28);
        assert_eq!(from_spec("K_{3,4}", 0).unwrap().m(), 12);
        assert_eq!(from_spec("P_9", 0).unwrap().m(), 8);
        assert_eq!(from_spec("C_5", 0).unwrap().m(), 5);
        assert_eq!(from_spec("petersen", 0).unwrap().m(), 15);
    }

    #[test]
    fn named_and_positional() {
        let a = from_spec("tree-random n=20 Δ=4 seed=7", 0).unwrap();
        let b = from_spec("tree-random 20 4 7", 99).unwrap();
        assert_eq!(a, b);
        assert!(a.max_degree() <= 4);
        assert_eq!(from_spec("grid 3x4", 0).unwrap(), from_spec("grid rows=3 cols=4", 0).unwrap());
        assert_eq!(from_spec("multipartite 4,4", 0).unwrap().m(), 16);
        assert_eq!(from_spec("multipartite 2 3 4", 0).unwrap().n(), 9);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(from_spec("wheel 5", 0).is_err());
        assert!(from_spec("complete", 0).is_err());
        assert!(from_spec("complete 5 6", 0).is_err());
        assert!(from_spec("path k=3", 0).is_err());
    }
}
