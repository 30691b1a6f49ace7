#pragma once

#include <stdexcept>
#include <string>
#include <vector>

// Core combinatorial objects: rooted labeled trees, parking functions,
// permutations, and the statistics and bijections defined on them.
//
// Conventions:
//   * Trees live on vertex set {0..n} rooted at 0; only vertices 1..n carry
//     a parent pointer. The root is never counted as a leaf.
//   * Prufer codes use the smallest-label-leaf elimination order over the
//     full vertex set {0..n}; codes have length n-1.
namespace treepark {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotIncreasingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rooted labeled tree on {0..n}. parent_of(i) is defined for 1 <= i <= n;
// following parent links always reaches the root 0.
class Tree {
  public:
    Tree() = default;
    explicit Tree(std::vector<int> parent) : par_(std::move(parent)) {}

    int n() const { return static_cast<int>(par_.size()); }
    int parent_of(int v) const { return par_[v - 1]; }
    const std::vector<int>& parents() const { return par_; }

    bool operator==(const Tree&) const = default;

  private:
    std::vector<int> par_;  // par_[i-1] = parent of vertex i
};

// Prufer code for a tree on {0..n}: a word of length n-1 over {0..n}.
struct PruferCode {
    int n = 1;
    std::vector<int> code;

    bool operator==(const PruferCode&) const = default;
};

class ParkingFunction {
  public:
    ParkingFunction() = default;
    explicit ParkingFunction(std::vector<int> prefs);

    int n() const { return static_cast<int>(prefs_.size()); }
    int pref(int i) const { return prefs_[i - 1]; }  // 1-based car index
    const std::vector<int>& prefs() const { return prefs_; }

    bool operator==(const ParkingFunction&) const = default;

  private:
    std::vector<int> prefs_;
};

class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    int n() const { return static_cast<int>(word_.size()); }
    int at(int i) const { return word_[i - 1]; }  // 1-based position
    const std::vector<int>& word() const { return word_; }

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<int> word_;
};

// Validates the parent mapping (values in range, every vertex reaches 0).
// Throws DomainError or CycleError.
Tree validate_tree(int n, const std::vector<int>& parent);

Tree prufer_decode(const PruferCode& code);
PruferCode prufer_encode(const Tree& t);

// inv(T): pairs (i,j), 1 <= i < j <= n, with j on the path from i to the root.
int tree_inversions(const Tree& t);

// lev(T): childless vertices among 1..n. The root never counts.
int tree_leaves(const Tree& t);

bool is_increasing_tree(const Tree& t);

// DFS from the root, always visiting the largest-labeled child first; the
// visit order of 1..n is a permutation. Bijective from increasing trees in
// Tree(n+1) onto S_n, with des(output) = lev(t) - 1.
Permutation increasing_tree_to_permutation(const Tree& t);

bool is_parking_function(const std::vector<int>& prefs);

// binom(n+1, 2) minus the sum of preferences.
int cosum(const ParkingFunction& pf);

// Positions i with pref(i) > i.
int excedances(const ParkingFunction& pf);

// Runs the parking procedure; car i parks at spot result.at(i).
Permutation parking_outcome(const ParkingFunction& pf);

Permutation perm_inverse(const Permutation& p);
int perm_descents(const Permutation& p);
int perm_inversions(const Permutation& p);

// sigma_1 < sigma_2 > sigma_3 < ... (up-down).
bool is_alternating(const Permutation& p);

// Simsun: for every k, the subword on letters {1..k} has no double descent.
bool is_simsun(const Permutation& p);

}  // namespace treepark
