#include "fairdiv/subadditive_alg.h"

#include <algorithm>
#include <string>
#include <utility>

#include "fairdiv/errors.h"

namespace fairdiv {
namespace {

nlohmann::json MatchToJson(const SubMatch& match) {
  switch (match.kind) {
    case SubMatch::Kind::kNone:
      return nullptr;
    case SubMatch::Kind::kWhite:
      return nlohmann::json{{"white", match.owner}};
    case SubMatch::Kind::kBlue:
      return nlohmann::json{{"blue", match.bundle.Items()}};
  }
  return nullptr;
}

class SubadditiveMatcher {
 public:
  SubadditiveMatcher(const Instance& instance, const Allocation& x,
                     const Ratio& alpha)
      : instance_(instance), alpha_(alpha) {
    state_.x = x.bundles();
    state_.z = x.bundles();
    state_.match.assign(instance.n(), SubMatch::None());
  }

  void Run() {
    const long long m1 = instance_.m() + 1;
    // Safety net only; the trace tests check the tighter (m+1)^3.
    const long long cap = m1 * m1 * m1 * (instance_.n() + 1);
    long long iterations = 0;
    while (true) {
      const auto it = std::find(state_.match.begin(), state_.match.end(),
                                SubMatch::None());
      if (it == state_.match.end()) return;
      if (++iterations > cap) {
        throw InternalError("subadditive loop exceeded " + std::to_string(cap) +
                            " iterations");
      }
      Step(static_cast<int>(it - state_.match.begin()));
    }
  }

  SubState& state() { return state_; }

 private:
  Ratio V(int agent, Bundle b) const { return instance_.Value(agent, b); }

  void UnmatchWhite(int owner) {
    for (SubMatch& mt : state_.match) {
      if (mt == SubMatch::White(owner)) mt = SubMatch::None();
    }
  }

  // {k : M_k = Z_k and v_k(Z_k) < alpha v_k(S)}, lowest index first.
  int FirstInK(Bundle s) const {
    for (int k = 0; k < instance_.n(); ++k) {
      if (state_.match[k] == SubMatch::White(k) &&
          V(k, state_.z[k]) < alpha_ * V(k, s)) {
        return k;
      }
    }
    return -1;
  }

  // Smallest S subset of R with K_S nonempty: by size, then
  // lexicographically on sorted items.
  std::pair<Bundle, int> MinimalS(Bundle r) const {
    const std::vector<int> items = r.Items();
    const int size = static_cast<int>(items.size());
    for (int s = 1; s <= size; ++s) {
      std::vector<int> idx(s);
      for (int t = 0; t < s; ++t) idx[t] = t;
      while (true) {
        Bundle subset;
        for (int t : idx) subset = subset.Plus(items[t]);
        if (int k = FirstInK(subset); k >= 0) return {subset, k};
        int t = s - 1;
        while (t >= 0 && idx[t] == size - s + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < s; ++u) idx[u] = idx[u - 1] + 1;
      }
    }
    throw InternalError("no subset S of R has a nonempty K_S");
  }

  void Record(SubStep step) {
    step.x = state_.x;
    step.z = state_.z;
    step.match = state_.match;
    state_.trace.push_back(std::move(step));
  }

  void Step(int i) {
    const std::vector<Candidate> candidates =
        AvailableBundles(state_.x, state_.z, state_.match);
    const Candidate* favorite = nullptr;
    Ratio best;
    for (const Candidate& c : candidates) {
      Ratio v = V(i, c.bundle);
      if (favorite == nullptr || v > best) {
        best = std::move(v);
        favorite = &c;
      }
    }
    SubStep step{.i = i};
    if (favorite == nullptr || V(i, state_.z[i]) >= alpha_ * best) {
      UnmatchWhite(i);
      state_.match[i] = SubMatch::White(i);
      step.tag = SubCase::kSelf;
      Record(std::move(step));
      return;
    }
    const Candidate fav = *favorite;
    step.j = fav.owner;
    step.g = fav.g;
    step.big_j = fav.bundle;
    switch (fav.colour) {
      case Colour::kWhite:
        Split(step);
        break;
      case Colour::kRed:
        state_.x[fav.owner] = state_.z[fav.owner];
        state_.match[i] = SubMatch::Blue(fav.bundle);
        step.tag = SubCase::kRed;
        break;
      case Colour::kBlue:
        state_.match[fav.owner] = SubMatch::None();
        state_.match[i] = SubMatch::Blue(fav.bundle);
        step.tag = SubCase::kBlue;
        break;
    }
    Record(std::move(step));
  }

  void Split(SubStep& step) {
    const int i = step.i;
    const int j = step.j;
    const int g = step.g;
    const Bundle big_j = step.big_j;
    auto& x = state_.x;
    auto& z = state_.z;
    auto& match = state_.match;

    UnmatchWhite(j);
    match[i] = SubMatch::Blue(big_j);
    const Bundle r = x[j] - big_j;
    step.r = r;
    const Ratio vx = V(j, x[j]);
    const Ratio a1 = alpha_ + Ratio(1);
    // v_j(T) >= alpha/(alpha+1) v_j(X_j), cross-multiplied.
    auto good_enough = [&](Bundle t) { return V(j, t) * a1 >= alpha_ * vx; };

    if (good_enough(Bundle::Single(g))) {
      z[j] = Bundle::Single(g);
      x[j] = z[j];
      step.tag = SubCase::kSingle;
      return;
    }
    if (FirstInK(r) < 0) {
      if (!good_enough(r)) {
        z[j] = big_j;
        match[i] = SubMatch::White(j);
        step.tag = SubCase::kKeepJ;
      } else {
        z[j] = r;
        x[j] = r;
        step.tag = SubCase::kTakeR;
      }
      return;
    }
    const auto [s, k] = MinimalS(r);
    step.s = s;
    step.k = k;
    if (V(j, big_j) >= alpha_ * vx) {
      z[j] = big_j;
      x[j] = big_j;
      x[k] = z[k];
      match[k] = SubMatch::Blue(s);
      match[i] = SubMatch::White(j);
      step.tag = SubCase::kJWithK;
    } else if (good_enough(s)) {
      z[j] = s;
      x[j] = s;
      step.tag = SubCase::kTakeS;
    } else {
      z[j] = r - s;
      x[j] = z[j];
      x[k] = z[k];
      match[k] = SubMatch::Blue(s);
      step.tag = SubCase::kRestWithK;
    }
  }

  const Instance& instance_;
  Ratio alpha_;
  SubState state_;
};

}  // namespace

std::string_view SubCaseTag(SubCase c) {
  switch (c) {
    case SubCase::kSelf:
      return "1";
    case SubCase::kSingle:
      return "2.1";
    case SubCase::kKeepJ:
      return "2.2";
    case SubCase::kTakeR:
      return "2.3";
    case SubCase::kJWithK:
      return "2.4";
    case SubCase::kTakeS:
      return "2.5";
    case SubCase::kRestWithK:
      return "2.6";
    case SubCase::kRed:
      return "3";
    case SubCase::kBlue:
      return "4";
  }
  return "?";
}

Bundle Resolve(const std::vector<Bundle>& z, const SubMatch& match) {
  switch (match.kind) {
    case SubMatch::Kind::kNone:
      return Bundle();
    case SubMatch::Kind::kWhite:
      return z[match.owner];
    case SubMatch::Kind::kBlue:
      return match.bundle;
  }
  return Bundle();
}

std::vector<Candidate> AvailableBundles(const std::vector<Bundle>& x,
                                        const std::vector<Bundle>& z,
                                        const std::vector<SubMatch>& match) {
  std::vector<Candidate> out;
  const int n = static_cast<int>(z.size());
  for (int j = 0; j < n; ++j) {
    for (int g : z[j]) out.push_back({Colour::kWhite, j, g, z[j].Minus(g)});
  }
  for (int j = 0; j < n; ++j) {
    out.push_back({Colour::kRed, j, -1, x[j] - z[j]});
  }
  for (int j = 0; j < n; ++j) {
    if (match[j].kind != SubMatch::Kind::kBlue) continue;
    for (int g : match[j].bundle) {
      out.push_back({Colour::kBlue, j, g, match[j].bundle.Minus(g)});
    }
  }
  return out;
}

Algorithm2Result Algorithm2(const Instance& instance, const Allocation& x,
                            const Ratio& alpha) {
  RequireClass(instance, ValuationClass::kSubadditive);
  RequireCompatible(instance, x);
  if (!x.complete()) {
    throw PreconditionError("input allocation must be complete, unallocated: " +
                            x.Unallocated().ToString());
  }
  if (alpha.sign() < 0 || alpha > Ratio(1, 2)) {
    throw PreconditionError("alpha = " + alpha.ToString() +
                            " must lie in [0, 1/2] for subadditive valuations");
  }
  SubadditiveMatcher matcher(instance, x, alpha);
  matcher.Run();
  SubState& state = matcher.state();
  std::vector<Bundle> bundles;
  for (const SubMatch& mt : state.match) bundles.push_back(Resolve(state.z, mt));
  try {
    Allocation allocation(instance.m(), std::move(bundles));
    return {std::move(allocation), std::move(state)};
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("matched bundles overlap: ") + e.what());
  }
}

nlohmann::json SubTraceToJson(const SubState& state) {
  nlohmann::json steps = nlohmann::json::array();
  for (const SubStep& step : state.trace) {
    nlohmann::json j;
    j["case"] = std::string(SubCaseTag(step.tag));
    j["i"] = step.i;
    if (step.j >= 0) j["j"] = step.j;
    if (step.k >= 0) j["k"] = step.k;
    if (step.g >= 0) j["g"] = step.g;
    if (step.tag != SubCase::kSelf) j["J"] = step.big_j.Items();
    if (!step.r.empty()) j["R"] = step.r.Items();
    if (!step.s.empty()) j["S"] = step.s.Items();
    nlohmann::json x = nlohmann::json::array();
    nlohmann::json z = nlohmann::json::array();
    nlohmann::json m = nlohmann::json::array();
    for (const Bundle& b : step.x) x.push_back(b.Items());
    for (const Bundle& b : step.z) z.push_back(b.Items());
    for (const SubMatch& mt : step.match) m.push_back(MatchToJson(mt));
    j["x"] = std::move(x);
    j["z"] = std::move(z);
    j["match"] = std::move(m);
    steps.push_back(std::move(j));
  }
  return steps;
}

}  // namespace fairdiv
