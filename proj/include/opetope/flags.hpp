#pragma once

#include <map>
#include <string>
#include <vector>

#include "opetope/core.hpp"

namespace opetope {

constexpr int kDummy = -1;   // puncture
constexpr int kAbsent = -2;  // below the bottom of an r-flag

// Flags, r-flags and p-flags, stored by level: e[i] is the face of dimension i.
struct Flag {
  std::vector<int> e;

  int top() const { return int(e.size()) - 1; }
  int top_face() const { return e.back(); }
  int bottom() const;  // lowest present level
  int puncture() const;  // level of the dummy, or -1
  bool is_pflag() const { return puncture() >= 0; }
  // number of non-dummy entries
  int dim() const;
  auto operator<=>(const Flag&) const = default;
};

// Face of the cylinder: a signed copy of a face of P, a flag, or a p-flag.
struct CylFace {
  enum Kind { Flat, FlagFace, PFlagFace };
  Kind kind = Flat;
  int sign = 0;  // for flats: -1 or +1
  int base = -1;  // for flats
  Flag flag;  // for flags and p-flags

  static CylFace flat(int sign, int base) { return CylFace{Flat, sign, base, {}}; }
  static CylFace of(Flag f) {
    bool p = f.is_pflag();
    return CylFace{p ? PFlagFace : FlagFace, 0, -1, std::move(f)};
  }
  auto operator<=>(const CylFace&) const = default;
};

// Flags[top / over] when over >= 0, Flags[top / 0) otherwise.
struct FlagSet {
  int top;
  int over = -1;
};

enum class FaceType { Gamma, Iota, Delta };

std::string flag_text(const Hypergraph& h, const Flag& f);
std::string cyl_text(const Hypergraph& h, const CylFace& c);
// parses "[m,a02,v2]" and "[m,0,v2]"
Flag parse_flag(const Hypergraph& h, const std::string& text);
bool is_valid_flag(const Hypergraph& h, const Flag& f);

int sign(const Hypergraph& h, const Flag& f);
FaceType face_type(const Opetope& P, int top, int x);

// pencil over x inside P[within], sorted by the pencil order
std::vector<int> pencil(const Opetope& P, int x, int within);
bool pencil_less(const Opetope& P, int within, int x, int a, int b);

bool flag_less(const Opetope& P, const FlagSet& s, const Flag& x, const Flag& y);
// all members, unsorted
std::vector<Flag> enumerate_flag_set(const Opetope& P, const FlagSet& s);
// all members sorted by the flag order; throws InternalError if the order is not total
std::vector<Flag> sorted_flags(const Opetope& P, const FlagSet& s);

Flag initial_flag(const Opetope& P, const FlagSet& s);
Flag terminal_flag(const Opetope& P, const FlagSet& s);

// the low level, or -1 when undefined
int low_level(const Opetope& P, const FlagSet& s, const Flag& x);
Flag neighbour(const Opetope& P, const FlagSet& s, const Flag& x, int level);
// throws UsageError on the terminal flag
Flag next(const Opetope& P, const FlagSet& s, const Flag& x);

enum class SuccessorKind { Delta, DeltaGamma, Gamma, InvDelta, InvGammaDelta, InvGamma };
struct Successor {
  SuccessorKind kind;
  int level;
  bool high;
};
Successor successor_kind(const Opetope& P, const Flag& x, const Flag& next_flag);
std::string kind_text(SuccessorKind k);

Flag truncate(const Flag& x, int k);
Flag extend(const Hypergraph& h, const Flag& x, int face);
Flag puncture(const Flag& x, int i);
Flag intersect_consecutive(const Flag& x, const Flag& y);

// Per-face flag orders, (-)_high, (-)_low and the p-flag orders with sentinels.
class FlagTable {
 public:
  explicit FlagTable(const Opetope& P);

  const Opetope& opetope() const { return P_; }
  const std::vector<Flag>& flags_under(int x) const { return flags_[x]; }
  const std::vector<Flag>& maximal_flags() const { return flags_[P_.top()]; }
  int position(const Flag& f) const;
  bool is_initial(const Flag& f) const { return position(f) == 0; }
  bool is_terminal(const Flag& f) const { return position(f) == int(flags_[f.top_face()].size()) - 1; }

  CylFace high(const Flag& f) const;
  CylFace low(const Flag& f) const;
  // p-flags of x in order, with -x first and +x last
  const std::vector<CylFace>& pflag_chain(int x) const { return chains_[x]; }
  int chain_position(int x, const CylFace& z) const;
  // maximal p-flags of x, without sentinels
  std::vector<Flag> pflags_under(int x) const;

 private:
  Opetope P_;
  std::vector<std::vector<Flag>> flags_;
  std::map<Flag, int> pos_;
  std::vector<std::vector<CylFace>> chains_;
  std::vector<std::map<CylFace, int>> chain_pos_;
};

// the flag calculus of P against that of its dual
AxiomReport dual_flag_suite(const Opetope& P);

}  // namespace opetope
