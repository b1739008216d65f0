//! The line-oriented input format: named declarations of universes, sets,
//! maps, rings, ideals, partitions, homomorphisms and set-valued
//! homomorphisms.
//!
//! Declaration order is irrelevant; references are resolved to a fixed
//! point, every structure is validated at load time, and diagnostics carry
//! the source line. `#` starts a comment; indented lines continue the
//! declaration above them. [`Document::emit`] prints the canonical form,
//! which parses back to the same document.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use roughring::finite_ring::{Congruence, FiniteRing, RingHom};
use roughring::finite_sets::{SetValuedMap, Subset, Universe};
use roughring::powerset_ring::PowersetRing;
use roughring::rough_hom::SetValuedRingHom;

#[derive(Debug)]
pub struct DocError {
    pub line: usize,
    pub message: String,
}

impl DocError {
    fn new(line: usize, message: impl Into<String>) -> DocError {
        DocError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for DocError {}

/// How a declaration was written, for canonical re-emission.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Universe,
    Set { carrier: String },
    Map { source: String, target: String },
    RingZmod(usize),
    RingProduct(String, String),
    RingPsring(String),
    RingTable { one_declared: bool },
    Ideal { ring: String },
    Partition { ring: String },
    Hom { source: String, target: String },
    SvhClasses { ring: String, partition: String },
    SvhSingleton { hom: String },
    SvhTable { source: String, target: String },
}

/// A resolved, validated declaration.
#[derive(Debug, Clone, PartialEq)]
pub enum Item {
    Universe(Arc<Universe>),
    Set {
        carrier: String,
        subset: Subset,
    },
    Map(SetValuedMap),
    Ring(Arc<FiniteRing>),
    Ideal {
        ring: String,
        subset: Subset,
    },
    Partition {
        ring: String,
        congruence: Congruence,
    },
    Hom(RingHom),
    Svh(SetValuedRingHom),
}

impl Item {
    pub fn kind(&self) -> &'static str {
        match self {
            Item::Universe(_) => "universe",
            Item::Set { .. } => "set",
            Item::Map(_) => "map",
            Item::Ring(_) => "ring",
            Item::Ideal { .. } => "ideal",
            Item::Partition { .. } => "partition",
            Item::Hom(_) => "hom",
            Item::Svh(_) => "svh",
        }
    }
}

#[derive(Debug)]
pub struct Document {
    order: Vec<String>,
    entries: HashMap<String, (Decl, Item)>,
}

struct RawDecl {
    line: usize,
    keyword: String,
    name: String,
    rest: String,
    body: Vec<(usize, String)>,
}

/// Why one resolution attempt did not produce an item.
enum Hold {
    /// A referenced name is not (yet) defined.
    Missing(String),
    Fatal(DocError),
}

impl From<DocError> for Hold {
    fn from(e: DocError) -> Hold {
        Hold::Fatal(e)
    }
}

impl Document {
    pub fn parse(input: &str) -> Result<Document, DocError> {
        let raws = lex(input)?;
        let mut seen: HashMap<&str, usize> = HashMap::new();
        for raw in &raws {
            if let Some(previous) = seen.insert(raw.name.as_str(), raw.line) {
                return Err(DocError::new(
                    raw.line,
                    format!("name `{}` already declared on line {previous}", raw.name),
                ));
            }
        }

        // resolve to a fixed point so declaration order never matters
        let order: Vec<String> = raws.iter().map(|r| r.name.clone()).collect();
        let mut entries: HashMap<String, (Decl, Item)> = HashMap::new();
        let mut pending: Vec<&RawDecl> = raws.iter().collect();
        while !pending.is_empty() {
            let before = pending.len();
            let mut held = Vec::new();
            let mut blocked: Option<(usize, String, String)> = None;
            for raw in pending {
                match resolve(raw, &entries) {
                    Ok((decl, item)) => {
                        entries.insert(raw.name.clone(), (decl, item));
                    }
                    Err(Hold::Missing(what)) => {
                        if blocked.is_none() {
                            blocked = Some((raw.line, raw.name.clone(), what));
                        }
                        held.push(raw);
                    }
                    Err(Hold::Fatal(e)) => {
                        return Err(DocError::new(
                            e.line,
                            format!("in `{}`: {}", raw.name, e.message),
                        ))
                    }
                }
            }
            if held.len() == before {
                // a full pass resolved nothing: some reference can never land
                let (line, name, what) = blocked.expect("a held declaration records its blocker");
                return Err(DocError::new(
                    line,
                    format!("declaration `{name}` references `{what}`, which is not defined"),
                ));
            }
            pending = held;
        }
        Ok(Document { order, entries })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.order.iter().map(String::as_str)
    }

    pub fn get(&self, name: &str) -> Option<&Item> {
        self.entries.get(name).map(|(_, item)| item)
    }

    /// Canonical text form; parses back to an equal document.
    pub fn emit(&self) -> String {
        let mut out = String::from("# format: 1\n");
        for name in &self.order {
            let (decl, item) = &self.entries[name];
            emit_decl(&mut out, name, decl, item);
        }
        out
    }
}

fn lex(input: &str) -> Result<Vec<RawDecl>, DocError> {
    let mut decls: Vec<RawDecl> = Vec::new();
    for (i, raw_line) in input.lines().enumerate() {
        let lineno = i + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        if line.trim().is_empty() {
            continue;
        }
        if line.starts_with(' ') || line.starts_with('\t') {
            let Some(last) = decls.last_mut() else {
                return Err(DocError::new(
                    lineno,
                    "continuation line before any declaration",
                ));
            };
            last.body.push((lineno, line.trim().to_string()));
            continue;
        }
        let Some((head, rest)) = line.split_once(':') else {
            return Err(DocError::new(
                lineno,
                "expected `<kind> <name>: ...` (missing `:`)",
            ));
        };
        let mut parts = head.split_whitespace();
        let Some(keyword) = parts.next() else {
            return Err(DocError::new(lineno, "expected a declaration keyword"));
        };
        let Some(name) = parts.next() else {
            return Err(DocError::new(
                lineno,
                format!("expected a name after `{keyword}`"),
            ));
        };
        if let Some(extra) = parts.next() {
            return Err(DocError::new(
                lineno,
                format!("unexpected token `{extra}` before `:`"),
            ));
        }
        check_token(lineno, name)?;
        decls.push(RawDecl {
            line: lineno,
            keyword: keyword.to_string(),
            name: name.to_string(),
            rest: rest.trim().to_string(),
            body: Vec::new(),
        });
    }
    Ok(decls)
}

/// Names and labels are opaque tokens without whitespace, `:`, `#`, or
/// braces; the latter are reserved for partition-block syntax.
fn check_token(line: usize, token: &str) -> Result<(), DocError> {
    if token.is_empty() {
        return Err(DocError::new(line, "empty name"));
    }
    if token.contains([':', '#', '{', '}']) {
        return Err(DocError::new(
            line,
            format!("token `{token}` contains a reserved character (:, #, {{, }})"),
        ));
    }
    Ok(())
}

fn no_body(raw: &RawDecl) -> Result<(), Hold> {
    if let Some((line, _)) = raw.body.first() {
        return Err(DocError::new(
            *line,
            format!("`{}` declarations take no continuation lines", raw.keyword),
        )
        .into());
    }
    Ok(())
}

fn resolve(raw: &RawDecl, entries: &HashMap<String, (Decl, Item)>) -> Result<(Decl, Item), Hold> {
    match raw.keyword.as_str() {
        "universe" => resolve_universe(raw),
        "set" => resolve_set(raw, entries),
        "map" => resolve_map(raw, entries),
        "ring" => resolve_ring(raw, entries),
        "ideal" => resolve_ideal(raw, entries),
        "partition" => resolve_partition(raw, entries),
        "hom" => resolve_hom(raw, entries),
        "svh" => resolve_svh(raw, entries),
        other => Err(DocError::new(
            raw.line,
            format!(
                "unknown declaration kind `{other}` (expected universe, set, map, ring, ideal, \
                 partition, hom, or svh)"
            ),
        )
        .into()),
    }
}

fn lookup<'a>(entries: &'a HashMap<String, (Decl, Item)>, name: &str) -> Result<&'a Item, Hold> {
    match entries.get(name) {
        Some((_, item)) => Ok(item),
        None => Err(Hold::Missing(name.to_string())),
    }
}

fn need_universe(
    entries: &HashMap<String, (Decl, Item)>,
    name: &str,
    line: usize,
) -> Result<Arc<Universe>, Hold> {
    match lookup(entries, name)? {
        Item::Universe(u) => Ok(Arc::clone(u)),
        other => Err(DocError::new(
            line,
            format!("`{name}` is a {}, expected a universe", other.kind()),
        )
        .into()),
    }
}

fn need_ring(
    entries: &HashMap<String, (Decl, Item)>,
    name: &str,
    line: usize,
) -> Result<Arc<FiniteRing>, Hold> {
    match lookup(entries, name)? {
        Item::Ring(r) => Ok(Arc::clone(r)),
        other => Err(DocError::new(
            line,
            format!("`{name}` is a {}, expected a ring", other.kind()),
        )
        .into()),
    }
}

/// A set carrier: either a universe or the element universe of a ring.
fn need_carrier(
    entries: &HashMap<String, (Decl, Item)>,
    name: &str,
    line: usize,
) -> Result<Arc<Universe>, Hold> {
    match lookup(entries, name)? {
        Item::Universe(u) => Ok(Arc::clone(u)),
        Item::Ring(r) => Ok(Arc::clone(r.elems())),
        other => Err(DocError::new(
            line,
            format!(
                "`{name}` is a {}, expected a universe or a ring",
                other.kind()
            ),
        )
        .into()),
    }
}

fn resolve_universe(raw: &RawDecl) -> Result<(Decl, Item), Hold> {
    no_body(raw)?;
    let labels: Vec<&str> = raw.rest.split_whitespace().collect();
    for label in &labels {
        check_token(raw.line, label)?;
    }
    let universe = Universe::new(labels).map_err(|e| DocError::new(raw.line, e.to_string()))?;
    Ok((Decl::Universe, Item::Universe(universe)))
}

/// Splits `"<carrier> = <members>"`.
fn carrier_and_members(raw: &RawDecl) -> Result<(&str, &str), Hold> {
    let Some((carrier, members)) = raw.rest.split_once('=') else {
        return Err(DocError::new(raw.line, "expected `<carrier> = <members...>`").into());
    };
    let carrier = carrier.trim();
    check_token(raw.line, carrier)?;
    Ok((carrier, members.trim()))
}

fn members_to_subset(universe: &Arc<Universe>, members: &str, line: usize) -> Result<Subset, Hold> {
    let mut subset = Subset::empty(universe);
    for token in members.split_whitespace() {
        let Some(index) = universe.index_of(token) else {
            return Err(
                DocError::new(line, format!("`{token}` is not an element of the carrier")).into(),
            );
        };
        subset.insert(index);
    }
    Ok(subset)
}

fn resolve_set(
    raw: &RawDecl,
    entries: &HashMap<String, (Decl, Item)>,
) -> Result<(Decl, Item), Hold> {
    no_body(raw)?;
    let (carrier, members) = carrier_and_members(raw)?;
    let universe = need_carrier(entries, carrier, raw.line)?;
    let subset = members_to_subset(&universe, members, raw.line)?;
    Ok((
        Decl::Set {
            carrier: carrier.to_string(),
        },
        Item::Set {
            carrier: carrier.to_string(),
            subset,
        },
    ))
}

fn arrow_names(rest: &str, line: usize) -> Result<(&str, &str), Hold> {
    let Some((left, right)) = rest.split_once("->") else {
        return Err(DocError::new(line, "expected `<source> -> <target>`").into());
    };
    Ok((left.trim(), right.trim()))
}

fn resolve_map(
    raw: &RawDecl,
    entries: &HashMap<String, (Decl, Item)>,
) -> Result<(Decl, Item), Hold> {
    let (src_name, dst_name) = arrow_names(&raw.rest, raw.line)?;
    let source = need_universe(entries, src_name, raw.line)?;
    let target = need_universe(entries, dst_name, raw.line)?;
    let images = body_images(raw, &source, &target)?;
    let map = SetValuedMap::new(Arc::clone(&source), Arc::clone(&target), images)
        .map_err(|e| DocError::new(raw.line, e.to_string()))?;
    Ok((
        Decl::Map {
            source: src_name.to_string(),
            target: dst_name.to_string(),
        },
        Item::Map(map),
    ))
}

/// Parses `elem: members...` continuation lines into one image per source
/// element; elements without a line get the empty image.
fn body_images(
    raw: &RawDecl,
    source: &Arc<Universe>,
    target: &Arc<Universe>,
) -> Result<Vec<Subset>, Hold> {
    let mut images: Vec<Option<Subset>> = vec![None; source.size()];
    for (line, text) in &raw.body {
        let Some((elem, members)) = text.split_once(':') else {
            return Err(DocError::new(*line, "expected `<element>: <members...>`").into());
        };
        let elem = elem.trim();
        let Some(index) = source.index_of(elem) else {
            return Err(
                DocError::new(*line, format!("`{elem}` is not an element of the source")).into(),
            );
        };
        if images[index].is_some() {
            return Err(DocError::new(*line, format!("image of `{elem}` already given")).into());
        }
        images[index] = Some(members_to_subset(target, members, *line)?);
    }
    Ok(images
        .into_iter()
        .map(|s| s.unwrap_or_else(|| Subset::empty(target)))
        .collect())
}

fn resolve_ring(
    raw: &RawDecl,
    entries: &HashMap<String, (Decl, Item)>,
) -> Result<(Decl, Item), Hold> {
    let mut parts = raw.rest.split_whitespace();
    let form = parts.next().unwrap_or("");
    match form {
        "zmod" => {
            no_body(raw)?;
            let arg = parts
                .next()
                .ok_or_else(|| DocError::new(raw.line, "expected a modulus after `zmod`"))?;
            let n: usize = arg
                .parse()
                .map_err(|_| DocError::new(raw.line, format!("`{arg}` is not a valid modulus")))?;
            if n == 0 {
                return Err(DocError::new(raw.line, "the modulus must be at least 1").into());
            }
            let ring = FiniteRing::zmod(n).map_err(|e| DocError::new(raw.line, e.to_string()))?;
            Ok((Decl::RingZmod(n), Item::Ring(ring)))
        }
        "product" => {
            no_body(raw)?;
            let a = parts
                .next()
                .ok_or_else(|| DocError::new(raw.line, "expected two ring names"))?;
            let b = parts
                .next()
                .ok_or_else(|| DocError::new(raw.line, "expected two ring names"))?;
            let left = need_ring(entries, a, raw.line)?;
            let right = need_ring(entries, b, raw.line)?;
            let ring = FiniteRing::product(&left, &right)
                .map_err(|e| DocError::new(raw.line, e.to_string()))?;
            Ok((
                Decl::RingProduct(a.to_string(), b.to_string()),
                Item::Ring(ring),
            ))
        }
        "psring" => {
            no_body(raw)?;
            let base = parts
                .next()
                .ok_or_else(|| DocError::new(raw.line, "expected a universe name"))?;
            let universe = need_universe(entries, base, raw.line)?;
            let ring = PowersetRing::new(universe)
                .as_finite_ring()
                .map_err(|e| DocError::new(raw.line, e.to_string()))?;
            Ok((Decl::RingPsring(base.to_string()), Item::Ring(ring)))
        }
        "table" => resolve_ring_table(raw, parts.collect()),
        other => Err(DocError::new(
            raw.line,
            format!("unknown ring form `{other}` (expected zmod, product, psring, or table)"),
        )
        .into()),
    }
}

fn resolve_ring_table(raw: &RawDecl, labels: Vec<&str>) -> Result<(Decl, Item), Hold> {
    for label in &labels {
        check_token(raw.line, label)?;
    }
    let universe = Universe::new(labels.iter().copied())
        .map_err(|e| DocError::new(raw.line, e.to_string()))?;
    let n = universe.size();
    let mut zero: Option<usize> = None;
    let mut one: Option<usize> = None;
    let mut add: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut mul: Vec<Option<Vec<usize>>> = vec![None; n];

    for (line, text) in &raw.body {
        let Some((key, value)) = text.split_once(':') else {
            return Err(DocError::new(*line, "expected `<key>: <value>`").into());
        };
        let value = value.trim();
        let mut key_parts = key.split_whitespace();
        let keyword = key_parts.next().unwrap_or("");
        let index_of = |label: &str| -> Result<usize, Hold> {
            universe.index_of(label).ok_or_else(|| {
                DocError::new(*line, format!("`{label}` is not a ring element")).into()
            })
        };
        match keyword {
            "zero" | "one" => {
                let slot = if keyword == "zero" {
                    &mut zero
                } else {
                    &mut one
                };
                if slot.is_some() {
                    return Err(DocError::new(*line, format!("`{keyword}` already given")).into());
                }
                *slot = Some(index_of(value)?);
            }
            "add" | "mul" => {
                let Some(row_label) = key_parts.next() else {
                    return Err(DocError::new(
                        *line,
                        format!("expected `{keyword} <element>: <row>`"),
                    )
                    .into());
                };
                let row_index = index_of(row_label)?;
                let mut row = Vec::with_capacity(n);
                for token in value.split_whitespace() {
                    row.push(index_of(token)?);
                }
                if row.len() != n {
                    return Err(DocError::new(
                        *line,
                        format!("row has {} entries, expected {n}", row.len()),
                    )
                    .into());
                }
                let table = if keyword == "add" { &mut add } else { &mut mul };
                if table[row_index].is_some() {
                    return Err(DocError::new(
                        *line,
                        format!("`{keyword} {row_label}` already given"),
                    )
                    .into());
                }
                table[row_index] = Some(row);
            }
            other => {
                return Err(DocError::new(
                    *line,
                    format!("unknown table key `{other}` (expected zero, one, add, or mul)"),
                )
                .into())
            }
        }
    }

    let Some(zero) = zero else {
        return Err(DocError::new(raw.line, "table ring needs a `zero:` line").into());
    };
    let unwrap_rows =
        |rows: Vec<Option<Vec<usize>>>, what: &str| -> Result<Vec<Vec<usize>>, Hold> {
            rows.into_iter()
                .enumerate()
                .map(|(i, row)| {
                    row.ok_or_else(|| {
                        DocError::new(
                            raw.line,
                            format!("missing `{what} {}` row", universe.label(i)),
                        )
                        .into()
                    })
                })
                .collect()
        };
    let add = unwrap_rows(add, "add")?;
    let mul = unwrap_rows(mul, "mul")?;
    let one_declared = one.is_some();
    let ring = FiniteRing::from_tables(universe, &add, &mul, zero, one)
        .map_err(|e| DocError::new(raw.line, e.to_string()))?;
    Ok((Decl::RingTable { one_declared }, Item::Ring(ring)))
}

fn resolve_ideal(
    raw: &RawDecl,
    entries: &HashMap<String, (Decl, Item)>,
) -> Result<(Decl, Item), Hold> {
    no_body(raw)?;
    let (ring_name, members) = carrier_and_members(raw)?;
    let ring = need_ring(entries, ring_name, raw.line)?;
    let subset = members_to_subset(ring.elems(), members, raw.line)?;
    if let Some(violation) = ring
        .is_ideal(&subset)
        .map_err(|e| DocError::new(raw.line, e.to_string()))?
    {
        return Err(DocError::new(
            raw.line,
            format!(
                "`{}` is not an ideal of `{ring_name}`: {violation}",
                raw.name
            ),
        )
        .into());
    }
    Ok((
        Decl::Ideal {
            ring: ring_name.to_string(),
        },
        Item::Ideal {
            ring: ring_name.to_string(),
            subset,
        },
    ))
}

fn resolve_partition(
    raw: &RawDecl,
    entries: &HashMap<String, (Decl, Item)>,
) -> Result<(Decl, Item), Hold> {
    no_body(raw)?;
    let (ring_name, blocks_text) = carrier_and_members(raw)?;
    let ring = need_ring(entries, ring_name, raw.line)?;
    let blocks = parse_blocks(blocks_text, raw.line)?;
    let mut block_sets = Vec::with_capacity(blocks.len());
    for block in &blocks {
        let mut subset = Subset::empty(ring.elems());
        for token in block {
            let Some(index) = ring.elems().index_of(token) else {
                return Err(DocError::new(
                    raw.line,
                    format!("`{token}` is not an element of `{ring_name}`"),
                )
                .into());
            };
            subset.insert(index);
        }
        block_sets.push(subset);
    }
    let congruence = Congruence::from_partition(&ring, &block_sets)
        .map_err(|e| DocError::new(raw.line, format!("not a congruence: {e}")))?;
    Ok((
        Decl::Partition {
            ring: ring_name.to_string(),
        },
        Item::Partition {
            ring: ring_name.to_string(),
            congruence,
        },
    ))
}

/// Splits `{a b} {c}` into label groups; labels may themselves contain
/// balanced braces (powerset-ring element names), so depth is tracked.
fn parse_blocks(text: &str, line: usize) -> Result<Vec<Vec<String>>, DocError> {
    let mut blocks = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '{' => {
                depth += 1;
                if depth == 1 {
                    current.clear();
                    continue;
                }
                current.push(c);
            }
            '}' => {
                if depth == 0 {
                    return Err(DocError::new(line, "unbalanced `}` in partition"));
                }
                depth -= 1;
                if depth == 0 {
                    blocks.push(
                        current
                            .split_whitespace()
                            .map(str::to_string)
                            .collect::<Vec<_>>(),
                    );
                    continue;
                }
                current.push(c);
            }
            _ => {
                if depth == 0 {
                    if !c.is_whitespace() {
                        return Err(DocError::new(
                            line,
                            "expected `{...}` blocks separated by spaces",
                        ));
                    }
                } else {
                    current.push(c);
                }
            }
        }
    }
    if depth != 0 {
        return Err(DocError::new(line, "unbalanced `{` in partition"));
    }
    Ok(blocks)
}

fn resolve_hom(
    raw: &RawDecl,
    entries: &HashMap<String, (Decl, Item)>,
) -> Result<(Decl, Item), Hold> {
    no_body(raw)?;
    let Some((arrow, pairs)) = raw.rest.split_once('=') else {
        return Err(DocError::new(raw.line, "expected `<source> -> <target> = <pairs...>`").into());
    };
    let (src_name, dst_name) = arrow_names(arrow, raw.line)?;
    let source = need_ring(entries, src_name, raw.line)?;
    let target = need_ring(entries, dst_name, raw.line)?;

    let mut table: Vec<Option<usize>> = vec![None; source.size()];
    for pair in pairs.split_whitespace() {
        let Some((from, to)) = pair.split_once(':') else {
            return Err(DocError::new(
                raw.line,
                format!("`{pair}` is not a `<source>:<target>` pair"),
            )
            .into());
        };
        let Some(x) = source.elems().index_of(from) else {
            return Err(DocError::new(
                raw.line,
                format!("`{from}` is not an element of `{src_name}`"),
            )
            .into());
        };
        let Some(y) = target.elems().index_of(to) else {
            return Err(DocError::new(
                raw.line,
                format!("`{to}` is not an element of `{dst_name}`"),
            )
            .into());
        };
        if table[x].is_some() {
            return Err(DocError::new(raw.line, format!("image of `{from}` already given")).into());
        }
        table[x] = Some(y);
    }
    let table: Vec<usize> = table
        .into_iter()
        .enumerate()
        .map(|(x, t)| {
            t.ok_or_else(|| {
                DocError::new(
                    raw.line,
                    format!("missing image for element `{}`", source.label(x)),
                )
            })
        })
        .collect::<Result<_, _>>()?;
    let hom = RingHom::from_table(&source, &target, table)
        .map_err(|e| DocError::new(raw.line, e.to_string()))?;
    Ok((
        Decl::Hom {
            source: src_name.to_string(),
            target: dst_name.to_string(),
        },
        Item::Hom(hom),
    ))
}

fn resolve_svh(
    raw: &RawDecl,
    entries: &HashMap<String, (Decl, Item)>,
) -> Result<(Decl, Item), Hold> {
    let mut parts = raw.rest.split_whitespace();
    let form = parts.next().unwrap_or("");
    match form {
        "classes" => {
            no_body(raw)?;
            let ring_name = parts
                .next()
                .ok_or_else(|| DocError::new(raw.line, "expected `classes <ring> <partition>`"))?;
            let partition_name = parts
                .next()
                .ok_or_else(|| DocError::new(raw.line, "expected `classes <ring> <partition>`"))?;
            let ring = need_ring(entries, ring_name, raw.line)?;
            let congruence = match lookup(entries, partition_name)? {
                Item::Partition {
                    ring: of,
                    congruence,
                } => {
                    if of != ring_name {
                        return Err(DocError::new(
                            raw.line,
                            format!(
                                "partition `{partition_name}` is over `{of}`, not `{ring_name}`"
                            ),
                        )
                        .into());
                    }
                    congruence.clone()
                }
                other => {
                    return Err(DocError::new(
                        raw.line,
                        format!(
                            "`{partition_name}` is a {}, expected a partition",
                            other.kind()
                        ),
                    )
                    .into())
                }
            };
            debug_assert_eq!(congruence.ring(), &ring);
            Ok((
                Decl::SvhClasses {
                    ring: ring_name.to_string(),
                    partition: partition_name.to_string(),
                },
                Item::Svh(SetValuedRingHom::from_congruence(&congruence)),
            ))
        }
        "singleton" => {
            no_body(raw)?;
            let hom_name = parts
                .next()
                .ok_or_else(|| DocError::new(raw.line, "expected `singleton <hom>`"))?;
            let hom = match lookup(entries, hom_name)? {
                Item::Hom(h) => h.clone(),
                other => {
                    return Err(DocError::new(
                        raw.line,
                        format!("`{hom_name}` is a {}, expected a hom", other.kind()),
                    )
                    .into())
                }
            };
            Ok((
                Decl::SvhSingleton {
                    hom: hom_name.to_string(),
                },
                Item::Svh(SetValuedRingHom::from_hom(&hom)),
            ))
        }
        "table" => {
            let arrow = parts.collect::<Vec<_>>().join(" ");
            let (src_name, dst_name) = arrow_names(&arrow, raw.line)?;
            let source = need_ring(entries, src_name, raw.line)?;
            let target = need_ring(entries, dst_name, raw.line)?;
            let images = body_images(raw, source.elems(), target.elems())?;
            let map = SetValuedMap::new(
                Arc::clone(source.elems()),
                Arc::clone(target.elems()),
                images,
            )
            .map_err(|e| DocError::new(raw.line, e.to_string()))?;
            let svh = SetValuedRingHom::new(source, target, map)
                .map_err(|e| DocError::new(raw.line, e.to_string()))?;
            Ok((
                Decl::SvhTable {
                    source: src_name.to_string(),
                    target: dst_name.to_string(),
                },
                Item::Svh(svh),
            ))
        }
        other => Err(DocError::new(
            raw.line,
            format!("unknown svh form `{other}` (expected classes, singleton, or table)"),
        )
        .into()),
    }
}

fn emit_decl(out: &mut String, name: &str, decl: &Decl, item: &Item) {
    use std::fmt::Write;
    match (decl, item) {
        (Decl::Universe, Item::Universe(u)) => {
            let labels: Vec<&str> = u.labels().collect();
            writeln!(out, "universe {name}: {}", labels.join(" ")).unwrap();
        }
        (Decl::Set { carrier }, Item::Set { subset, .. }) => {
            writeln!(out, "set {name}: {carrier} ={}", joined_members(subset)).unwrap();
        }
        (Decl::Map { source, target }, Item::Map(map)) => {
            writeln!(out, "map {name}: {source} -> {target}").unwrap();
            for x in 0..map.source().size() {
                writeln!(
                    out,
                    "  {}:{}",
                    map.source().label(x),
                    joined_members(map.image_of(x))
                )
                .unwrap();
            }
        }
        (Decl::RingZmod(n), _) => {
            writeln!(out, "ring {name}: zmod {n}").unwrap();
        }
        (Decl::RingProduct(a, b), _) => {
            writeln!(out, "ring {name}: product {a} {b}").unwrap();
        }
        (Decl::RingPsring(base), _) => {
            writeln!(out, "ring {name}: psring {base}").unwrap();
        }
        (Decl::RingTable { one_declared }, Item::Ring(ring)) => {
            let labels: Vec<&str> = ring.elems().labels().collect();
            writeln!(out, "ring {name}: table {}", labels.join(" ")).unwrap();
            writeln!(out, "  zero: {}", ring.label(ring.zero())).unwrap();
            if *one_declared {
                if let Some(one) = ring.one() {
                    writeln!(out, "  one: {}", ring.label(one)).unwrap();
                }
            }
            for (op, table) in [("add", ring.add_table()), ("mul", ring.mul_table())] {
                for (x, row) in table.iter().enumerate() {
                    let row: Vec<&str> = row.iter().map(|&e| ring.label(e)).collect();
                    writeln!(out, "  {op} {}: {}", ring.label(x), row.join(" ")).unwrap();
                }
            }
        }
        (Decl::Ideal { ring }, Item::Ideal { subset, .. }) => {
            writeln!(out, "ideal {name}: {ring} ={}", joined_members(subset)).unwrap();
        }
        (Decl::Partition { ring }, Item::Partition { congruence, .. }) => {
            let blocks: Vec<String> = congruence
                .blocks()
                .iter()
                .map(|b| {
                    let labels: Vec<&str> = b.labels().collect();
                    format!("{{{}}}", labels.join(" "))
                })
                .collect();
            writeln!(out, "partition {name}: {ring} = {}", blocks.join(" ")).unwrap();
        }
        (Decl::Hom { source, target }, Item::Hom(hom)) => {
            let pairs: Vec<String> = (0..hom.source().size())
                .map(|x| {
                    format!(
                        "{}:{}",
                        hom.source().label(x),
                        hom.target().label(hom.apply(x))
                    )
                })
                .collect();
            writeln!(
                out,
                "hom {name}: {source} -> {target} = {}",
                pairs.join(" ")
            )
            .unwrap();
        }
        (Decl::SvhClasses { ring, partition }, _) => {
            writeln!(out, "svh {name}: classes {ring} {partition}").unwrap();
        }
        (Decl::SvhSingleton { hom }, _) => {
            writeln!(out, "svh {name}: singleton {hom}").unwrap();
        }
        (Decl::SvhTable { source, target }, Item::Svh(svh)) => {
            writeln!(out, "svh {name}: table {source} -> {target}").unwrap();
            for x in 0..svh.source().size() {
                writeln!(
                    out,
                    "  {}:{}",
                    svh.source().label(x),
                    joined_members(svh.image_of(x))
                )
                .unwrap();
            }
        }
        _ => unreachable!("declaration and item kinds always agree"),
    }
}

fn joined_members(subset: &Subset) -> String {
    let mut s = String::new();
    for label in subset.labels() {
        s.push(' ');
        s.push_str(label);
    }
    s
}
