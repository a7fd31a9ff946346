//! Position automata and their follow quotient, both crisp over `Σ ∪ Y`.
//!
//! The position automaton has one state per position plus a fresh initial
//! state, giving exactly `n + 1` states. The follow automaton is its
//! quotient by the relation that merges positions agreeing on both
//! last-membership and follow set; it never has more states and often has
//! fewer.

use std::collections::{BTreeMap, BTreeSet};

use crate::mark::{MarkedExpression, MarkedNode, Position, PositionSymbol};

/// A state id in a crisp automaton; the initial state is always 0.
pub type StateId = usize;

/// `nullable`, `first`, `last`, and `follow` of a marked expression,
/// computed by the standard inductive rules on the desugared tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionSets {
    pub nullable: bool,
    pub first: BTreeSet<Position>,
    pub last: BTreeSet<Position>,
    /// One entry per position, possibly empty.
    pub follow: BTreeMap<Position, BTreeSet<Position>>,
}

/// Computes `nullable`/`first`/`last`/`follow` for a marked expression.
pub fn position_sets(m: &MarkedExpression) -> PositionSets {
    struct Node {
        nullable: bool,
        first: BTreeSet<Position>,
        last: BTreeSet<Position>,
    }

    fn go(node: &MarkedNode, follow: &mut BTreeMap<Position, BTreeSet<Position>>) -> Node {
        match node {
            MarkedNode::Empty => Node {
                nullable: false,
                first: BTreeSet::new(),
                last: BTreeSet::new(),
            },
            MarkedNode::Epsilon => Node {
                nullable: true,
                first: BTreeSet::new(),
                last: BTreeSet::new(),
            },
            MarkedNode::Pos(p) => Node {
                nullable: false,
                first: BTreeSet::from([*p]),
                last: BTreeSet::from([*p]),
            },
            MarkedNode::Union(l, r) => {
                let left = go(l, follow);
                let right = go(r, follow);
                Node {
                    nullable: left.nullable || right.nullable,
                    first: &left.first | &right.first,
                    last: &left.last | &right.last,
                }
            }
            MarkedNode::Concat(l, r) => {
                let left = go(l, follow);
                let right = go(r, follow);
                for &i in &left.last {
                    follow.get_mut(&i).expect("position known").extend(&right.first);
                }
                Node {
                    nullable: left.nullable && right.nullable,
                    first: if left.nullable {
                        &left.first | &right.first
                    } else {
                        left.first
                    },
                    last: if right.nullable {
                        &left.last | &right.last
                    } else {
                        right.last
                    },
                }
            }
            MarkedNode::Star(inner) => {
                let body = go(inner, follow);
                for &i in &body.last {
                    follow.get_mut(&i).expect("position known").extend(&body.first);
                }
                Node {
                    nullable: true,
                    first: body.first,
                    last: body.last,
                }
            }
        }
    }

    let mut follow: BTreeMap<Position, BTreeSet<Position>> = (1..=m.position_count())
        .map(|p| (p, BTreeSet::new()))
        .collect();
    let root = go(m.root(), &mut follow);
    PositionSets {
        nullable: root.nullable,
        first: root.first,
        last: root.last,
        follow,
    }
}

/// A crisp (unweighted) NFA over `Σ ∪ Y` with initial state 0.
///
/// `state_labels` records which positions each state stands for: singleton
/// sets for a position automaton, merged classes for a follow automaton.
/// Position 0 marks the initial state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispAutomaton {
    state_count: usize,
    alphabet: BTreeSet<PositionSymbol>,
    transitions: BTreeSet<(StateId, PositionSymbol, StateId)>,
    finals: BTreeSet<StateId>,
    state_labels: Vec<BTreeSet<Position>>,
}

impl CrispAutomaton {
    /// Assembles an automaton from parts, checking state ids are in range.
    pub fn new(
        state_count: usize,
        transitions: BTreeSet<(StateId, PositionSymbol, StateId)>,
        finals: BTreeSet<StateId>,
        state_labels: Vec<BTreeSet<Position>>,
    ) -> Self {
        assert!(state_count > 0, "an automaton needs at least the initial state");
        assert_eq!(state_labels.len(), state_count, "one label set per state");
        for (from, _, to) in &transitions {
            assert!(*from < state_count && *to < state_count, "transition out of range");
        }
        for f in &finals {
            assert!(*f < state_count, "final state out of range");
        }
        let alphabet = transitions.iter().map(|(_, s, _)| s.clone()).collect();
        CrispAutomaton {
            state_count,
            alphabet,
            transitions,
            finals,
            state_labels,
        }
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    /// The initial state id (always 0).
    pub fn initial(&self) -> StateId {
        0
    }

    /// The symbols labelling at least one transition.
    pub fn alphabet(&self) -> &BTreeSet<PositionSymbol> {
        &self.alphabet
    }

    pub fn transitions(&self) -> impl Iterator<Item = &(StateId, PositionSymbol, StateId)> {
        self.transitions.iter()
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_final(&self, state: StateId) -> bool {
        self.finals.contains(&state)
    }

    pub fn label(&self, state: StateId) -> &BTreeSet<Position> {
        &self.state_labels[state]
    }

    /// States reachable from `states` on one occurrence of `symbol`.
    pub fn step(&self, states: &BTreeSet<StateId>, symbol: &PositionSymbol) -> BTreeSet<StateId> {
        self.transitions
            .iter()
            .filter(|(from, s, _)| states.contains(from) && s == symbol)
            .map(|(_, _, to)| *to)
            .collect()
    }

    /// Whether the automaton accepts a word over `Σ ∪ Y`.
    pub fn accepts(&self, word: &[PositionSymbol]) -> bool {
        let mut current = BTreeSet::from([self.initial()]);
        for symbol in word {
            current = self.step(&current, symbol);
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|s| self.is_final(*s))
    }
}

/// Builds the position automaton: states `{0} ∪ pos`, a transition into
/// position `j` for every `j` in `first` (from 0) or in `follow(i)`
/// (from `i`), finals `last` plus 0 when nullable. Exactly `n + 1` states.
pub fn build_position_automaton(m: &MarkedExpression, ps: &PositionSets) -> CrispAutomaton {
    let n = m.position_count();
    let symbol_of = |p: Position| m.symbol(p).expect("position in range").clone();

    let mut transitions = BTreeSet::new();
    for &j in &ps.first {
        transitions.insert((0, symbol_of(j), j));
    }
    for (&i, targets) in &ps.follow {
        for &j in targets {
            transitions.insert((i, symbol_of(j), j));
        }
    }

    let mut finals: BTreeSet<StateId> = ps.last.clone();
    if ps.nullable {
        finals.insert(0);
    }

    let state_labels = (0..=n).map(|p| BTreeSet::from([p])).collect();
    CrispAutomaton::new(n + 1, transitions, finals, state_labels)
}

/// Quotients a position automaton by the follow relation: two states merge
/// when they agree on finality and on their follow set. The initial state
/// takes `follow = first` and `finality = nullable`, and may merge too.
/// Classes keep their members in `state_labels` and are renumbered with the
/// initial class as 0, the rest ordered by smallest contained position.
pub fn follow_quotient(pos_aut: &CrispAutomaton, ps: &PositionSets) -> CrispAutomaton {
    debug_assert!(
        (0..pos_aut.state_count()).all(|s| pos_aut.label(s) == &BTreeSet::from([s])),
        "expected a position automaton with singleton labels"
    );

    let key = |state: StateId| -> (bool, &BTreeSet<Position>) {
        if state == 0 {
            (ps.nullable, &ps.first)
        } else {
            (ps.last.contains(&state), &ps.follow[&state])
        }
    };

    // Grouping in ascending state order makes class ids ordered by smallest
    // member, with the class of state 0 first.
    let mut class_ids: BTreeMap<(bool, &BTreeSet<Position>), usize> = BTreeMap::new();
    let mut members: Vec<BTreeSet<Position>> = Vec::new();
    let mut class_of = vec![0usize; pos_aut.state_count()];
    for (state, class) in class_of.iter_mut().enumerate() {
        let next_id = members.len();
        let id = *class_ids.entry(key(state)).or_insert(next_id);
        if id == members.len() {
            members.push(BTreeSet::new());
        }
        members[id].insert(state);
        *class = id;
    }

    let transitions = pos_aut
        .transitions()
        .map(|(from, symbol, to)| (class_of[*from], symbol.clone(), class_of[*to]))
        .collect();
    let finals = pos_aut.finals().iter().map(|s| class_of[*s]).collect();
    CrispAutomaton::new(members.len(), transitions, finals, members)
}
