#include "treepark/combinat.hpp"

#include <algorithm>
#include <numeric>

namespace treepark {

ParkingFunction::ParkingFunction(std::vector<int> prefs) : prefs_(std::move(prefs)) {
    if (!is_parking_function(prefs_))
        throw DomainError("sequence is not a parking function");
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > n || seen[v])
            throw DomainError("word is not a permutation of 1..n");
        seen[v] = 1;
    }
}

Tree validate_tree(int n, const std::vector<int>& parent) {
    if (n < 1 || static_cast<int>(parent.size()) != n)
        throw DomainError("parent mapping must cover exactly {1..n}");
    for (int i = 1; i <= n; ++i) {
        const int p = parent[i - 1];
        if (p < 0 || p > n)
            throw DomainError("parent of " + std::to_string(i) + " out of range");
        if (p == i)
            throw CycleError("vertex " + std::to_string(i) + " is its own parent");
    }
    for (int i = 1; i <= n; ++i) {
        int v = i;
        for (int steps = 0; v != 0; ++steps) {
            if (steps >= n)
                throw CycleError("vertex " + std::to_string(i) + " never reaches the root");
            v = parent[v - 1];
        }
    }
    return Tree(parent);
}

Tree prufer_decode(const PruferCode& c) {
    const int n = c.n;
    const int m = n + 1;  // vertices 0..n
    if (static_cast<int>(c.code.size()) != n - 1)
        throw DomainError("Prufer code must have length n-1");
    for (int v : c.code)
        if (v < 0 || v > n) throw DomainError("Prufer code symbol out of range");

    std::vector<std::vector<int>> adj(m);
    if (m == 2) {
        adj[0].push_back(1);
        adj[1].push_back(0);
    } else {
        std::vector<int> deg(m, 1);
        for (int v : c.code) ++deg[v];
        int ptr = 0;
        while (deg[ptr] != 1) ++ptr;
        int leaf = ptr;
        for (int v : c.code) {
            adj[leaf].push_back(v);
            adj[v].push_back(leaf);
            if (--deg[v] == 1 && v < ptr) {
                leaf = v;
            } else {
                do ++ptr; while (deg[ptr] != 1);
                leaf = ptr;
            }
        }
        adj[leaf].push_back(m - 1);
        adj[m - 1].push_back(leaf);
    }

    // Orient every edge toward the root 0.
    std::vector<int> parent(n, -1);
    std::vector<int> stack{0};
    std::vector<char> seen(m, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : adj[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                parent[w - 1] = u;
                stack.push_back(w);
            }
        }
    }
    return Tree(std::move(parent));
}

PruferCode prufer_encode(const Tree& t) {
    const int n = t.n();
    const int m = n + 1;
    PruferCode out{n, {}};
    if (n == 1) return out;

    std::vector<std::vector<int>> adj(m);
    for (int i = 1; i <= n; ++i) {
        const int p = t.parent_of(i);
        adj[i].push_back(p);
        adj[p].push_back(i);
    }
    std::vector<int> deg(m);
    for (int v = 0; v < m; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<char> gone(m, 0);

    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int step = 0; step < m - 2; ++step) {
        int nb = -1;
        for (int w : adj[leaf])
            if (!gone[w]) { nb = w; break; }
        out.code.push_back(nb);
        gone[leaf] = 1;
        if (--deg[nb] == 1 && nb < ptr) {
            leaf = nb;
        } else {
            do ++ptr; while (deg[ptr] != 1 || gone[ptr]);
            leaf = ptr;
        }
    }
    return out;
}

int tree_inversions(const Tree& t) {
    const int n = t.n();
    int inv = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = t.parent_of(i); j != 0; j = t.parent_of(j))
            if (j > i) ++inv;
    return inv;
}

int tree_leaves(const Tree& t) {
    const int n = t.n();
    std::vector<char> has_child(n + 1, 0);
    for (int i = 1; i <= n; ++i) has_child[t.parent_of(i)] = 1;
    int leaves = 0;
    for (int v = 1; v <= n; ++v)
        if (!has_child[v]) ++leaves;
    return leaves;
}

bool is_increasing_tree(const Tree& t) {
    const int n = t.n();
    // Labels grow away from the root, so it suffices to check each edge.
    for (int i = 1; i <= n; ++i)
        if (t.parent_of(i) > i) return false;
    return true;
}

Permutation increasing_tree_to_permutation(const Tree& t) {
    if (!is_increasing_tree(t))
        throw NotIncreasingError("tree has a positive inversion");
    const int n = t.n();
    std::vector<std::vector<int>> children(n + 1);
    for (int i = 1; i <= n; ++i) children[t.parent_of(i)].push_back(i);
    for (auto& ch : children) std::sort(ch.begin(), ch.end());  // ascending; pop back = largest

    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int u = stack.back();
        if (children[u].empty()) {
            stack.pop_back();
            continue;
        }
        const int v = children[u].back();
        children[u].pop_back();
        order.push_back(v);
        stack.push_back(v);
    }
    return Permutation(std::move(order));
}

bool is_parking_function(const std::vector<int>& prefs) {
    const int n = static_cast<int>(prefs.size());
    for (int v : prefs)
        if (v < 1 || v > n) return false;
    std::vector<int> sorted = prefs;
    std::sort(sorted.begin(), sorted.end());
    for (int j = 1; j <= n; ++j)
        if (sorted[j - 1] > j) return false;
    return true;
}

int cosum(const ParkingFunction& pf) {
    const int n = pf.n();
    const int total = std::accumulate(pf.prefs().begin(), pf.prefs().end(), 0);
    return n * (n + 1) / 2 - total;
}

int excedances(const ParkingFunction& pf) {
    int count = 0;
    for (int i = 1; i <= pf.n(); ++i)
        if (pf.pref(i) > i) ++count;
    return count;
}

Permutation parking_outcome(const ParkingFunction& pf) {
    const int n = pf.n();
    std::vector<char> taken(n + 2, 0);
    std::vector<int> spot(n);
    for (int i = 1; i <= n; ++i) {
        int s = pf.pref(i);
        while (taken[s]) ++s;
        taken[s] = 1;
        spot[i - 1] = s;
    }
    return Permutation(std::move(spot));
}

Permutation perm_inverse(const Permutation& p) {
    const int n = p.n();
    std::vector<int> inv(n);
    for (int i = 1; i <= n; ++i) inv[p.at(i) - 1] = i;
    return Permutation(std::move(inv));
}

int perm_descents(const Permutation& p) {
    int d = 0;
    for (int i = 1; i < p.n(); ++i)
        if (p.at(i) > p.at(i + 1)) ++d;
    return d;
}

int perm_inversions(const Permutation& p) {
    int inv = 0;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = i + 1; j <= p.n(); ++j)
            if (p.at(i) > p.at(j)) ++inv;
    return inv;
}

bool is_alternating(const Permutation& p) {
    for (int i = 1; i < p.n(); ++i) {
        if (i % 2 == 1 && p.at(i) > p.at(i + 1)) return false;
        if (i % 2 == 0 && p.at(i) < p.at(i + 1)) return false;
    }
    return true;
}

bool is_simsun(const Permutation& p) {
    const int m = p.n();
    std::vector<int> sub;
    sub.reserve(m);
    for (int k = 1; k <= m; ++k) {
        sub.clear();
        for (int v : p.word())
            if (v <= k) sub.push_back(v);
        for (size_t i = 0; i + 2 < sub.size(); ++i)
            if (sub[i] > sub[i + 1] && sub[i + 1] > sub[i + 2]) return false;
    }
    return true;
}

}  // namespace treepark
