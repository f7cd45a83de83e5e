#include "torlen/consequence.hpp"

#include <deque>
#include <unordered_map>

namespace torlen {

  Word expand(ConsequenceProof const& proof, std::vector<Word> const& relators) {
    Word product;
    for (auto const& f : proof.factors) {
      product *= f.conjugator;
      product *= relators.at(f.relator).power(f.sign);
      product *= f.conjugator.inverse();
    }
    return free_reduce(product);
  }

  bool verify(ConsequenceProof const& proof,
              std::vector<Word> const& relators,
              Word const&              target) {
    for (auto const& f : proof.factors) {
      if (f.relator >= relators.size() || (f.sign != 1 && f.sign != -1)) {
        return false;
      }
    }
    return expand(proof, relators) == free_reduce(target);
  }

  ConsequenceSearch::ConsequenceSearch(Alphabet alphabet, std::vector<Word> relators)
      : _alphabet(std::move(alphabet)), _relators(std::move(relators)) {
    _by_first.resize(2 * _alphabet.size());
    _by_last.resize(2 * _alphabet.size());
    _core_conjugators.reserve(_relators.size());
    for (std::size_t i = 0; i < _relators.size(); ++i) {
      auto cr = cyclic_reduce(_relators[i]);
      _core_conjugators.push_back(_alphabet.encode(cr.conjugator));
      Code core = _alphabet.encode(cr.core);
      if (core.empty()) {
        continue;
      }
      for (int sign : {1, -1}) {
        Code u = sign > 0 ? core : code::inverse(core);
        for (std::size_t s = 0; s < u.size(); ++s) {
          Insertion ins;
          ins.letters.assign(u.begin() + static_cast<long>(s), u.end());
          ins.letters.insert(ins.letters.end(), u.begin(),
                             u.begin() + static_cast<long>(s));
          ins.rotation_head.assign(u.begin(), u.begin() + static_cast<long>(s));
          ins.relator = i;
          ins.sign    = sign;
          bucket(_by_first, ins.letters.front()).push_back(_insertions.size());
          bucket(_by_last, ins.letters.back()).push_back(_insertions.size());
          _insertions.push_back(std::move(ins));
        }
      }
    }
  }

  std::optional<ConsequenceProof>
  ConsequenceSearch::prove(Word const&              target,
                           ConsequenceBudget const& budget) const {
    struct Node {
      Code        word;
      std::size_t parent    = 0;
      std::size_t insertion = 0;
      std::size_t position  = 0;  // where the insertion went into the parent
      std::size_t depth     = 0;
    };

    Code start = code::reduce(_alphabet.encode(target));
    if (start.empty()) {
      return ConsequenceProof{};
    }
    std::vector<Node>                                             nodes{{start, 0, 0, 0, 0}};
    std::unordered_map<Code, std::size_t, code::CodeHash> seen{{start, 0}};

    auto build = [&](std::size_t node) {
      // Node k arises from its parent t as c u c^-1 t with c = t[:p] h^-1,
      // h the rotation head of u.  Walking back gives C_k ... C_1 start = e,
      // so start = C_1^-1 ... C_k^-1 with C^-1 = c u^-1 c^-1.
      std::vector<ConjugateFactor> reversed;
      while (node != 0) {
        auto const& n   = nodes[node];
        auto const& ins = _insertions[n.insertion];
        Code const& t   = nodes[n.parent].word;
        Code prefix(t.begin(), t.begin() + static_cast<long>(n.position));
        Code conj = code::multiply(prefix, code::inverse(ins.rotation_head));
        conj      = code::multiply(conj, code::inverse(_core_conjugators[ins.relator]));
        reversed.push_back({_alphabet.decode(conj), ins.relator, -ins.sign});
        node = n.parent;
      }
      ConsequenceProof proof;
      proof.factors.assign(reversed.rbegin(), reversed.rend());
      return proof;
    };

    Code next;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
      if (nodes[head].depth >= budget.max_conjugates) {
        continue;
      }
      std::size_t const depth = nodes[head].depth;
      std::size_t const n     = nodes[head].word.size();
      for (std::size_t p = 0; p <= n; ++p) {
        Code const& t = nodes[head].word;
        // some letter must cancel at one of the two junctions
        std::vector<std::size_t> const* lists[2] = {nullptr, nullptr};
        if (p > 0) {
          lists[0] = &bucket(_by_first, -t[p - 1]);
        }
        if (p < n) {
          lists[1] = &bucket(_by_last, -t[p]);
        }
        for (auto const* list : lists) {
          if (list == nullptr) {
            continue;
          }
          for (std::size_t k : *list) {
            Code const& t2 = nodes[head].word;
            Code const& r  = _insertions[k].letters;
            std::size_t left = 0;
            while (left < p && left < r.size() && t2[p - 1 - left] == -r[left]) {
              ++left;
            }
            std::size_t right = 0;
            while (right < n - p && right + left < r.size()
                   && r[r.size() - 1 - right] == -t2[p + right]) {
              ++right;
            }
            // fewer than half of r cancelling would lengthen the word
            if (2 * (left + right) < r.size()) {
              continue;
            }
            next.assign(t2.begin(), t2.begin() + static_cast<long>(p - left));
            next.insert(next.end(), r.begin() + static_cast<long>(left),
                        r.end() - static_cast<long>(right));
            next.insert(next.end(), t2.begin() + static_cast<long>(p + right), t2.end());
            if (left + right == r.size()) {
              code::reduce_in_place(next);
            }
            if (seen.count(next) > 0) {
              continue;
            }
            seen.emplace(next, nodes.size());
            nodes.push_back({next, head, k, p, depth + 1});
            if (next.empty()) {
              return build(nodes.size() - 1);
            }
            if (nodes.size() >= budget.max_states) {
              return std::nullopt;
            }
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace torlen
