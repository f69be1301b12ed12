//! Small augmenting-path max-flow used by connectivity and star-pack decisions.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: usize,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        Self { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    /// Adds an arc and its residual twin; returns the arc id.
    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: usize) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    /// Flow currently routed through arc `id`.
    pub(crate) fn flow_on(&self, id: usize) -> usize {
        self.arcs[id + 1].cap
    }

    /// Pushes augmenting paths (BFS, arcs scanned in insertion order) until
    /// either no path remains or `limit` units have been routed.
    pub(crate) fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut total = 0;
        let nodes = self.out.len();
        while total < limit {
            let mut pred: Vec<Option<usize>> = vec![None; nodes];
            let mut seen = vec![false; nodes];
            seen[source] = true;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for &id in &self.out[u] {
                    let arc = &self.arcs[id];
                    if arc.cap > 0 && !seen[arc.to] {
                        seen[arc.to] = true;
                        pred[arc.to] = Some(id);
                        queue.push_back(arc.to);
                    }
                }
            }
            if !seen[sink] {
                break;
            }
            let mut bottleneck = limit - total;
            let mut v = sink;
            while let Some(id) = pred[v] {
                bottleneck = bottleneck.min(self.arcs[id].cap);
                v = self.arcs[id ^ 1].to;
            }
            let mut v = sink;
            while let Some(id) = pred[v] {
                self.arcs[id].cap -= bottleneck;
                self.arcs[id ^ 1].cap += bottleneck;
                v = self.arcs[id ^ 1].to;
            }
            total += bottleneck;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond_flow() {
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 2);
        net.add_arc(0, 2, 1);
        net.add_arc(1, 3, 1);
        net.add_arc(2, 3, 2);
        let mid = net.add_arc(1, 2, 5);
        assert_eq!(net.max_flow(0, 3, usize::MAX), 3);
        assert_eq!(net.flow_on(mid), 1);
    }

    #[test]
    fn limit_caps_the_flow() {
        let mut net = FlowNetwork::new(2);
        net.add_arc(0, 1, 10);
        assert_eq!(net.max_flow(0, 1, 4), 4);
    }
}
