//! JSON, DOT and plain-text renderings of walks.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::ordinal::Ordinal;
use crate::walks_classic::WalkTrace;
use crate::walks_higher::{sigma_string, NodeKind, SignedWalkTree};

fn lits(t: &[Ordinal]) -> Vec<String> {
    t.iter().map(|o| o.to_string()).collect()
}

fn tuple(t: &[Ordinal]) -> String {
    format!("({})", lits(t).join(","))
}

fn sign(s: i8) -> &'static str {
    if s > 0 {
        "+"
    } else {
        "-"
    }
}

#[derive(Serialize)]
struct WalkJson {
    steps: Vec<String>,
    lower: Vec<String>,
    rho2: usize,
    rho1: Option<u64>,
}

/// `{"steps":[..],"lower":[..],"rho2":k,"rho1":m}`; `rho1` is null when the
/// weight is not finite.
pub fn walk_json(trace: &WalkTrace, rho1: Option<u64>) -> String {
    let w = WalkJson { steps: lits(&trace.steps), lower: lits(&trace.lower), rho2: trace.rho2(), rho1 };
    serde_json::to_string(&w).expect("serializable")
}

#[derive(Serialize)]
#[serde(untagged)]
enum NodeJson {
    Output { in_sign: i8, #[serde(rename = "in")] input: Vec<String>, out_sign: i8, out: String, children: Vec<String> },
    Boundary { in_sign: i8, #[serde(rename = "in")] input: Vec<String>, boundary: bool },
}

#[derive(Serialize)]
struct TreeJson {
    n: usize,
    root: String,
    nodes: BTreeMap<String, NodeJson>,
}

/// Compact JSON of a walk tree, with a trailing newline.
pub fn tree_json(tree: &SignedWalkTree) -> String {
    let nodes = tree
        .nodes
        .iter()
        .map(|(sigma, node)| {
            let key = sigma_string(sigma);
            let input = lits(&node.input);
            let v = match &node.kind {
                NodeKind::Boundary => NodeJson::Boundary { in_sign: node.in_sign, input, boundary: true },
                NodeKind::Output { out_sign, out, children, .. } => NodeJson::Output {
                    in_sign: node.in_sign,
                    input,
                    out_sign: *out_sign,
                    out: out.to_string(),
                    children: children.iter().map(|c| format!("{key}{}", c.label)).collect(),
                },
            };
            (key, v)
        })
        .collect();
    let mut s = serde_json::to_string(&TreeJson { n: tree.n, root: String::new(), nodes }).expect("serializable");
    s.push('\n');
    s
}

fn dot_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        if matches!(ch, '{' | '}' | '|' | '<' | '>' | '"' | '\\') {
            out.push('\\');
        }
        out.push(ch);
    }
    out
}

const EDGE_STYLES: [&str; 4] = ["solid", "dashed", "dotted", "bold"];

/// Graphviz rendering: record nodes with the signed input over the signed
/// output (or a cross for boundary nodes), edges styled by child label.
pub fn tree_dot(tree: &SignedWalkTree) -> String {
    let mut s = String::from("digraph tr {\n  node [shape=record, fontname=\"monospace\"];\n");
    for (sigma, node) in &tree.nodes {
        let id = format!("n{}", sigma_string(sigma));
        let top = dot_escape(&format!("{} {}", sign(node.in_sign), tuple(&node.input)));
        let bottom = match &node.kind {
            NodeKind::Boundary => "×".to_string(),
            NodeKind::Output { out_sign, out, .. } => dot_escape(&format!("{}{}", sign(*out_sign), out)),
        };
        writeln!(s, "  {id} [label=\"{{{top}|{bottom}}}\"];").unwrap();
    }
    for (sigma, node) in &tree.nodes {
        if let NodeKind::Output { children, .. } = &node.kind {
            let id = format!("n{}", sigma_string(sigma));
            for c in children {
                let style = EDGE_STYLES[c.label as usize % EDGE_STYLES.len()];
                writeln!(s, "  {id} -> {id}{} [label=\"{}\", style={style}];", c.label, c.label).unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Show {
    Outputs,
    Inputs,
    Both,
}

/// Indented outline of the tree, one node per line.
pub fn tree_ascii(tree: &SignedWalkTree, show: Show) -> String {
    let mut s = String::new();
    for (sigma, node) in &tree.nodes {
        let label = if sigma.is_empty() { "root".to_string() } else { sigma_string(sigma) };
        let input = format!("{} {}", sign(node.in_sign), tuple(&node.input));
        let output = match &node.kind {
            NodeKind::Boundary => "boundary".to_string(),
            NodeKind::Output { out_sign, out, .. } => format!("{}{}", sign(*out_sign), out),
        };
        let body = match show {
            Show::Outputs => output,
            Show::Inputs => input,
            Show::Both => format!("{input} => {output}"),
        };
        writeln!(s, "{:indent$}{label}: {body}", "", indent = 2 * sigma.len()).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clubs::{canonical_sequence, compound};
    use crate::ordinal::ord;
    use crate::walks_classic::upper_trace;
    use crate::walks_higher::expand_tr;

    #[test]
    fn json_shapes() {
        let c = compound(canonical_sequence(None), 2);
        let t = expand_tr(&c, 1, &[ord("0"), ord("1"), ord("3")]).unwrap();
        assert_eq!(
            tree_json(&t),
            concat!(
                r#"{"n":2,"root":"","nodes":{"":{"in_sign":1,"in":["0","1","3"],"out_sign":-1,"out":"2","children":["0","1"]},"#,
                r#""0":{"in_sign":1,"in":["0","1","2"],"boundary":true},"1":{"in_sign":1,"in":["0","2","3"],"boundary":true}}}"#,
                "\n"
            )
        );
        let w = upper_trace(&canonical_sequence(None), &ord("1"), &ord("w*2")).unwrap();
        assert_eq!(walk_json(&w, Some(1)), r#"{"steps":["w*2","w","1"],"lower":["0","0"],"rho2":2,"rho1":1}"#);
    }

    #[test]
    fn dot_and_ascii() {
        let c = compound(canonical_sequence(None), 2);
        let t = expand_tr(&c, 1, &[ord("0"), ord("1"), ord("3")]).unwrap();
        let d = tree_dot(&t);
        assert!(d.contains("n [label=\"{+ (0,1,3)|-2}\"];"));
        assert!(d.contains("n -> n1 [label=\"1\", style=dashed];"));
        assert!(d.contains("n0 [label=\"{+ (0,1,2)|×}\"];"));
        assert_eq!(dot_escape("a{b}|<c>\""), "a\\{b\\}\\|\\<c\\>\\\"");
        let a = tree_ascii(&t, Show::Both);
        assert_eq!(a, "root: + (0,1,3) => -2\n  0: + (0,1,2) => boundary\n  1: + (0,2,3) => boundary\n");
    }
}
