#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace opetope {

constexpr int kMaxDim = 16;

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// precondition failures on well-formed input (terminal flag, bad arguments)
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// a proved property failed; always a bug
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct Violation {
  std::string axiom;
  std::vector<std::string> faces;
  std::string witness;
};

struct AxiomReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<std::string> faces, std::string witness);
  void merge(const AxiomReport& other);
  bool has(const std::string& axiom) const;
  std::string summary() const;
};

class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::string name) : name_(std::move(name)) {}

  int add_face(const std::string& id, int dim);
  void set_gamma(int f, int g) { gamma_[f] = g; }
  void set_delta(int f, std::vector<int> d);
  // builder for hand-written fixtures; referenced faces must already exist
  int add(const std::string& id, int dim, const std::string& gamma = "",
          const std::vector<std::string>& delta = {});

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int size() const { return static_cast<int>(ids_.size()); }
  int dim() const;  // -1 when empty
  const std::string& id(int f) const { return ids_[f]; }
  int dim(int f) const { return dim_[f]; }
  int gamma(int f) const { return gamma_[f]; }
  const std::vector<int>& delta(int f) const { return delta_[f]; }
  const std::vector<int>& faces_of_dim(int k) const;
  int find(const std::string& id) const;
  int at(const std::string& id) const;

  std::vector<std::string> names(const std::vector<int>& fs) const;

 private:
  std::string name_;
  std::vector<std::string> ids_;
  std::vector<int> dim_;
  std::vector<int> gamma_;
  std::vector<std::vector<int>> delta_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> by_dim_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(size_t(n) * words_, 0) {}

  int size() const { return n_; }
  bool get(int i, int j) const { return (bits_[size_t(i) * words_ + j / 64] >> (j % 64)) & 1U; }
  void set(int i, int j) { bits_[size_t(i) * words_ + j / 64] |= uint64_t(1) << (j % 64); }
  void close();

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

struct Orders {
  BitMatrix plus;
  BitMatrix minus;

  bool lt_plus(int a, int b) const { return plus.get(a, b); }
  bool le_plus(int a, int b) const { return a == b || plus.get(a, b); }
  bool lt_minus(int a, int b) const { return minus.get(a, b); }
  bool le_minus(int a, int b) const { return a == b || minus.get(a, b); }
  bool perp_plus(int a, int b) const { return plus.get(a, b) || plus.get(b, a); }
  bool perp_minus(int a, int b) const { return minus.get(a, b) || minus.get(b, a); }
  // a <=+ some member of s
  bool le_plus_any(int a, const std::vector<int>& s) const;
};

// Orders of the sub-hypergraph given by mask (closed under gamma/delta), or of all of h.
Orders compute_orders(const Hypergraph& h, const std::vector<char>* mask = nullptr);

struct OrderRelation {
  enum Kind { Lower, Upper };
  Kind kind;
  int dimension;
  std::vector<std::pair<int, int>> pairs;
};

OrderRelation lower_order(const Hypergraph& h, int k);
OrderRelation upper_order(const Hypergraph& h, int k);

AxiomReport validate_structure(const Hypergraph& h);
AxiomReport is_opetopic_cardinal(const Hypergraph& h);
std::vector<int> size_vector(const Hypergraph& h);
// the well-founded order on sizes: compare from the highest differing dimension down
bool size_less(const std::vector<int>& a, const std::vector<int>& b);
// cardinal axioms plus size entries <= 1
AxiomReport is_opetope(const Hypergraph& h);

std::vector<char> closure_mask(const Hypergraph& h, const std::vector<int>& seeds);
Hypergraph restrict_to(const Hypergraph& h, const std::vector<char>& mask);
Hypergraph generated_sub(const Hypergraph& h, int x);

int iterated_codomain(const Hypergraph& h, int p, int k);
std::vector<int> boundary(const Hypergraph& h, int p);
bool occurs(const Hypergraph& h, int q, int p);
std::vector<int> iota_faces(const Hypergraph& h, int x);
std::vector<int> iota_faces(const Hypergraph& h, const std::vector<int>& xs);
Hypergraph dual(const Hypergraph& h);
// same ids, dimensions, gamma and delta (names of the hypergraphs ignored)
bool same_structure(const Hypergraph& a, const Hypergraph& b);

std::vector<int> gamma_of(const Hypergraph& h, const std::vector<int>& xs);
std::vector<int> delta_of(const Hypergraph& h, const std::vector<int>& xs);

// A validated opetope together with the orders of every generated sub-opetope P[x].
class Opetope {
 public:
  explicit Opetope(Hypergraph h);

  const Hypergraph& hg() const { return *h_; }
  std::shared_ptr<const Hypergraph> hg_ptr() const { return h_; }
  int top() const { return top_; }
  int dim() const { return h_->dim(top_); }
  const Orders& orders() const { return orders_in(top_); }
  const Orders& orders_in(int x) const { return sub_orders_[x]; }
  bool in(int x, int y) const { return masks_[x][y] != 0; }
  const std::vector<char>& mask(int x) const { return masks_[x]; }

 private:
  std::shared_ptr<const Hypergraph> h_;
  int top_ = -1;
  std::vector<std::vector<char>> masks_;
  std::vector<Orders> sub_orders_;
};

}  // namespace opetope
