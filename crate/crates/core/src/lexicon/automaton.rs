//! Acyclic word automata: a plain trie and its minimized form.
//!
//! Accepting states carry an index into a table of payload sets. Minimization
//! merges states with the same payload set and the same outgoing transitions,
//! bottom-up, so suffixes shared by many surfaces collapse into one path.

use std::collections::{BTreeMap, HashMap};

/// Sentinel for a non-accepting state.
pub const NO_SET: u32 = u32::MAX;

#[derive(Debug, Clone, Default)]
struct TrieNode {
    edges: BTreeMap<char, usize>,
    set: Vec<u32>,
}

/// Unminimized prefix tree from surfaces to payload ids.
#[derive(Debug, Clone)]
pub struct Trie {
    nodes: Vec<TrieNode>,
}

impl Default for Trie {
    fn default() -> Self {
        Trie {
            nodes: vec![TrieNode::default()],
        }
    }
}

impl Trie {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: &str, payload: u32) {
        let mut at = 0;
        for c in key.chars() {
            at = match self.nodes[at].edges.get(&c) {
                Some(&n) => n,
                None => {
                    self.nodes.push(TrieNode::default());
                    let n = self.nodes.len() - 1;
                    self.nodes[at].edges.insert(c, n);
                    n
                }
            };
        }
        let set = &mut self.nodes[at].set;
        if !set.contains(&payload) {
            set.push(payload);
        }
    }

    pub fn get(&self, key: &str) -> Option<&[u32]> {
        let mut at = 0;
        for c in key.chars() {
            at = *self.nodes[at].edges.get(&c)?;
        }
        let set = &self.nodes[at].set;
        (!set.is_empty()).then_some(set.as_slice())
    }

    pub fn state_count(&self) -> usize {
        self.nodes.len()
    }

    /// Every accepted key with its payload ids, in code point order.
    pub fn entries(&self) -> Vec<(String, Vec<u32>)> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, String::new())];
        while let Some((n, prefix)) = stack.pop() {
            let node = &self.nodes[n];
            if !node.set.is_empty() {
                out.push((prefix.clone(), node.set.clone()));
            }
            for (&c, &child) in node.edges.iter().rev() {
                let mut p = prefix.clone();
                p.push(c);
                stack.push((child, p));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct State {
    pub set: u32,
    pub first: u32,
    pub len: u32,
}

/// Minimal deterministic acyclic automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    pub(crate) states: Vec<State>,
    pub(crate) transitions: Vec<(char, u32)>,
    pub(crate) root: u32,
}

impl Automaton {
    /// Minimizes a trie. `set_of` maps a trie node's payload list to its set id.
    pub fn minimize(trie: &Trie, mut set_of: impl FnMut(&[u32]) -> u32) -> Automaton {
        let mut out = Automaton {
            states: Vec::new(),
            transitions: Vec::new(),
            root: 0,
        };
        let mut register: HashMap<(u32, Vec<(char, u32)>), u32> = HashMap::new();
        let mut ids = vec![u32::MAX; trie.nodes.len()];
        // children have larger indices than their parent, so reverse index
        // order visits every child before its parent
        for n in (0..trie.nodes.len()).rev() {
            let node = &trie.nodes[n];
            let set = if node.set.is_empty() { NO_SET } else { set_of(&node.set) };
            let trans: Vec<(char, u32)> = node.edges.iter().map(|(&c, &child)| (c, ids[child])).collect();
            let key = (set, trans);
            let id = match register.get(&key) {
                Some(&id) => id,
                None => {
                    let id = out.states.len() as u32;
                    out.states.push(State {
                        set,
                        first: out.transitions.len() as u32,
                        len: key.1.len() as u32,
                    });
                    out.transitions.extend_from_slice(&key.1);
                    register.insert(key, id);
                    id
                }
            };
            ids[n] = id;
        }
        out.root = ids[0];
        out
    }

    fn edges(&self, s: u32) -> &[(char, u32)] {
        let st = self.states[s as usize];
        &self.transitions[st.first as usize..(st.first + st.len) as usize]
    }

    fn step(&self, s: u32, c: char) -> Option<u32> {
        let edges = self.edges(s);
        edges.binary_search_by(|&(x, _)| x.cmp(&c)).ok().map(|i| edges[i].1)
    }

    /// Payload set id of an accepted key.
    pub fn get(&self, key: &str) -> Option<u32> {
        let mut s = self.root;
        for c in key.chars() {
            s = self.step(s, c)?;
        }
        let set = self.states[s as usize].set;
        (set != NO_SET).then_some(set)
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.len()
    }

    /// Every accepted key with its set id, in code point order.
    pub fn entries(&self) -> Vec<(String, u32)> {
        let mut out = Vec::new();
        let mut stack = vec![(self.root, String::new())];
        while let Some((s, prefix)) = stack.pop() {
            let set = self.states[s as usize].set;
            if set != NO_SET {
                out.push((prefix.clone(), set));
            }
            for &(c, t) in self.edges(s).iter().rev() {
                let mut p = prefix.clone();
                p.push(c);
                stack.push((t, p));
            }
        }
        out
    }

    /// Largest number of space-separated words in any accepted key.
    pub fn max_words(&self) -> usize {
        // longest count of ' ' transitions on a path to an accepting state
        let mut memo: Vec<Option<Option<usize>>> = vec![None; self.states.len()];
        fn go(a: &Automaton, s: u32, memo: &mut Vec<Option<Option<usize>>>) -> Option<usize> {
            if let Some(v) = memo[s as usize] {
                return v;
            }
            let mut best = (a.states[s as usize].set != NO_SET).then_some(0);
            for &(c, t) in a.edges(s) {
                if let Some(d) = go(a, t, memo) {
                    let d = d + usize::from(c == ' ');
                    best = Some(best.map_or(d, |b: usize| b.max(d)));
                }
            }
            memo[s as usize] = Some(best);
            best
        }
        go(self, self.root, &mut memo).map_or(0, |spaces| spaces + 1)
    }

    pub(crate) fn is_acyclic(&self) -> bool {
        // states are created after all their successors
        (0..self.states.len() as u32).all(|s| self.edges(s).iter().all(|&(_, t)| t < s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(words: &[(&str, u32)]) -> (Trie, Automaton) {
        let mut t = Trie::new();
        for &(w, p) in words {
            t.insert(w, p);
        }
        let mut sets: HashMap<Vec<u32>, u32> = HashMap::new();
        let a = Automaton::minimize(&t, |s| {
            let n = sets.len() as u32;
            *sets.entry(s.to_vec()).or_insert(n)
        });
        (t, a)
    }

    #[test]
    fn empty_has_one_state() {
        let (t, a) = build(&[]);
        assert_eq!(t.state_count(), 1);
        assert_eq!(a.state_count(), 1);
        assert_eq!(a.get(""), None);
        assert_eq!(a.max_words(), 0);
    }

    #[test]
    fn shares_suffixes() {
        let (t, a) = build(&[("agimit", 0), ("bisedimit", 0), ("agimi", 1), ("bisedimi", 1)]);
        assert!(a.state_count() < t.state_count());
        assert_eq!(a.get("agimit"), a.get("bisedimit"));
        assert_ne!(a.get("agimit"), a.get("agimi"));
        assert_eq!(a.get("agim"), None);
        assert_eq!(a.get("zzz"), None);
        assert!(a.is_acyclic());
    }

    #[test]
    fn entries_and_words() {
        let (t, a) = build(&[("së agimit", 0), ("b", 1), ("a", 2)]);
        let keys: Vec<String> = a.entries().into_iter().map(|(k, _)| k).collect();
        assert_eq!(keys, ["a", "b", "së agimit"]);
        assert_eq!(t.entries().len(), 3);
        assert_eq!(a.max_words(), 2);
    }
}
