// Bounded checks of the hypotheses behind the construction, for a semigroup
// given by generators acting on a finite set of sample points.
//
// Elements are words over the generators; two words are identified when they
// agree on every sample.  A failure found this way is a genuine
// counterexample (after re-validation), while a pass only means "no
// counterexample among words of length <= max_depth on these samples".
//
// A word {a, b, c} denotes a o b o c: c acts first.

#ifndef PSEUDOQUOTIENT_VERIFIER_HPP_
#define PSEUDOQUOTIENT_VERIFIER_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exact.hpp"

namespace pseudoquotient {

  using Word = std::vector<std::size_t>;

  template <typename Point>
  struct Generator {
    std::string                        name;
    std::function<Point(Point const&)> act;
  };

  template <typename Point>
  struct Presentation {
    std::string                          label;
    std::vector<Generator<Point>>        generators;
    std::vector<Point>                   sample_points;
    std::size_t                          max_depth = 5;
    //! Textual form of a point; also used as a hash key, so it must be
    //! injective.
    std::function<std::string(Point const&)> show;
  };

  struct InjectivityReport {
    bool pass = true;
    struct Counterexample {
      Word        word;
      std::size_t x;  // indices into sample_points
      std::size_t y;
    };
    std::optional<Counterexample> counterexample;
  };

  struct OreSearchReport {
    Word                f;
    Word                g;
    //! w1 o g == w2 o f on the samples, first in search order.
    std::optional<Word> f_prime;
    std::optional<Word> g_prime;
    bool                validated = false;

    bool found() const noexcept {
      return f_prime.has_value();
    }
  };

  struct CancellationReport {
    bool pass = true;
    struct Counterexample {
      Word f1;
      Word f2;
      Word g;
      //! a sample where f1 and f2 differ
      std::size_t witness_point;
    };
    std::optional<Counterexample> counterexample;
  };

  struct VerifyReport {
    std::string                  label;
    std::size_t                  depth_used   = 0;
    std::size_t                  sample_count = 0;
    std::size_t                  words_checked = 0;
    InjectivityReport            injectivity;
    std::vector<OreSearchReport> ore;
    CancellationReport           cancellation;

    //! An injectivity or cancellation failure; a missing Ore witness is not a
    //! counterexample, only an inconclusive bounded search.
    bool has_counterexample() const noexcept {
      return !injectivity.pass || !cancellation.pass;
    }
  };

  template <typename Point>
  class Verifier {
   public:
    explicit Verifier(Presentation<Point> presentation)
        : _p(std::move(presentation)) {
      if (_p.generators.empty()) {
        throw usage_error("presentation has no generators");
      }
      if (_p.sample_points.empty()) {
        throw usage_error("presentation has no sample points");
      }
      if (_p.max_depth == 0) {
        throw usage_error("max_depth must be >= 1");
      }
      if (!_p.show) {
        throw usage_error("presentation needs a point printer");
      }
      enumerate();
    }

    Presentation<Point> const& presentation() const noexcept {
      return _p;
    }

    //! All words of length 1..max_depth in length-lexicographic order.
    std::vector<Word> const& words() const noexcept {
      return _words;
    }

    std::string word_to_string(Word const& w) const {
      std::string s;
      for (auto a : w) {
        if (!s.empty()) {
          s += ' ';
        }
        s += _p.generators.at(a).name;
      }
      return s;
    }

    //! Evaluates w at x letter by letter, right to left.
    Point evaluate(Word const& w, Point x) const {
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        x = _p.generators.at(*it).act(x);
      }
      return x;
    }

    InjectivityReport verify_injectivity() const {
      auto const& samples = _p.sample_points;
      if (samples.size() < 2) {
        throw usage_error("injectivity check needs at least 2 sample points");
      }
      InjectivityReport report;
      for (std::size_t w = 0; w < _words.size(); ++w) {
        auto const& img = _images[w];
        for (std::size_t i = 0; i < samples.size(); ++i) {
          for (std::size_t j = i + 1; j < samples.size(); ++j) {
            if (samples[i] == samples[j] || !(img[i] == img[j])) {
              continue;
            }
            // re-validate from scratch
            if (evaluate(_words[w], samples[i])
                == evaluate(_words[w], samples[j])) {
              report.pass = false;
              report.counterexample
                  = InjectivityReport::Counterexample{_words[w], i, j};
              return report;
            }
          }
        }
      }
      return report;
    }

    //! Breadth-first search for (w1, w2) with w1 o g == w2 o f on the samples.
    //! Pairs are visited by total length |w1| + |w2|, then by w1, then by w2,
    //! words ordered length-lexicographically.
    OreSearchReport search_ore_witness(Word const& f, Word const& g) const {
      check_word(f);
      check_word(g);
      OreSearchReport report{f, g, std::nullopt, std::nullopt, false};
      auto            g_images = images_of(g);
      auto            f_images = images_of(f);
      std::vector<std::string> after_g, after_f;
      after_g.reserve(_words.size());
      after_f.reserve(_words.size());
      for (auto const& w : _words) {
        after_g.push_back(key(apply_all(w, g_images)));
        after_f.push_back(key(apply_all(w, f_images)));
      }
      auto const D = _p.max_depth;
      for (std::size_t total = 2; total <= 2 * D; ++total) {
        std::size_t const lo = total > D ? total - D : 1;
        std::size_t const hi = std::min(D, total - 1);
        for (std::size_t len1 = lo; len1 <= hi; ++len1) {
          auto const len2 = total - len1;
          for (std::size_t i = _first[len1]; i < _first[len1 + 1]; ++i) {
            for (std::size_t j = _first[len2]; j < _first[len2 + 1]; ++j) {
              if (after_g[i] != after_f[j]) {
                continue;
              }
              report.f_prime   = _words[i];
              report.g_prime   = _words[j];
              report.validated = validate_ore(f, g, _words[i], _words[j]);
              return report;
            }
          }
        }
      }
      return report;
    }

    //! Searches for f1 o g == f2 o g on the samples with f1, f2 differing on
    //! some sample.  Reports the first triple in (g, f2, f1) order.
    CancellationReport verify_right_cancellation() const {
      CancellationReport report;
      for (auto const& g : _words) {
        auto g_images = images_of(g);
        std::unordered_map<std::string, std::size_t> seen;
        for (std::size_t f = 0; f < _words.size(); ++f) {
          auto [it, inserted]
              = seen.emplace(key(apply_all(_words[f], g_images)), f);
          if (inserted) {
            continue;
          }
          auto const f1 = it->second;
          if (_keys[f1] == _keys[f]) {
            continue;  // same map on the samples
          }
          auto cx = validate_cancellation(_words[f1], _words[f], g);
          if (cx) {
            report.pass           = false;
            report.counterexample = std::move(cx);
            return report;
          }
        }
      }
      return report;
    }

    //! Injectivity, Ore search for every ordered pair of generators, and
    //! right cancellation.
    VerifyReport run() const {
      VerifyReport report;
      report.label         = _p.label;
      report.depth_used    = _p.max_depth;
      report.sample_count  = _p.sample_points.size();
      report.words_checked = _words.size();
      report.injectivity   = verify_injectivity();
      for (std::size_t a = 0; a < _p.generators.size(); ++a) {
        for (std::size_t b = 0; b < _p.generators.size(); ++b) {
          report.ore.push_back(search_ore_witness(Word{a}, Word{b}));
        }
      }
      report.cancellation = verify_right_cancellation();
      return report;
    }

   private:
    void check_word(Word const& w) const {
      if (w.empty()) {
        throw usage_error("words must be nonempty");
      }
      for (auto a : w) {
        if (a >= _p.generators.size()) {
          throw usage_error("word uses unknown generator index "
                            + std::to_string(a));
        }
      }
    }

    void enumerate() {
      auto const k = _p.generators.size();
      _first       = {0, 0};
      // length 1
      for (std::size_t a = 0; a < k; ++a) {
        _words.push_back({a});
        _images.emplace_back();
        for (auto const& x : _p.sample_points) {
          _images.back().push_back(_p.generators[a].act(x));
        }
      }
      _first.push_back(_words.size());
      for (std::size_t len = 2; len <= _p.max_depth; ++len) {
        auto const begin = _first[len - 1];
        auto const end   = _first[len];
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t s = begin; s < end; ++s) {
            Word w{a};
            w.insert(w.end(), _words[s].begin(), _words[s].end());
            _words.push_back(std::move(w));
            _images.push_back(apply_all(Word{a}, _images[s]));
          }
        }
        _first.push_back(_words.size());
      }
      _keys.reserve(_words.size());
      for (auto const& img : _images) {
        _keys.push_back(key(img));
      }
    }

    std::vector<Point> images_of(Word const& w) const {
      std::vector<Point> r;
      r.reserve(_p.sample_points.size());
      for (auto const& x : _p.sample_points) {
        r.push_back(evaluate(w, x));
      }
      return r;
    }

    std::vector<Point> apply_all(Word const& w,
                                 std::vector<Point> const& xs) const {
      std::vector<Point> r;
      r.reserve(xs.size());
      for (auto const& x : xs) {
        r.push_back(evaluate(w, x));
      }
      return r;
    }

    std::string key(std::vector<Point> const& xs) const {
      std::string k;
      for (auto const& x : xs) {
        k += _p.show(x);
        k += '\x1f';
      }
      return k;
    }

    static Word concat(Word a, Word const& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }

    bool validate_ore(Word const& f,
                      Word const& g,
                      Word const& fp,
                      Word const& gp) const {
      auto lhs = concat(fp, g);
      auto rhs = concat(gp, f);
      for (auto const& x : _p.sample_points) {
        if (!(evaluate(lhs, x) == evaluate(rhs, x))) {
          return false;
        }
      }
      return true;
    }

    std::optional<CancellationReport::Counterexample>
    validate_cancellation(Word const& f1, Word const& f2, Word const& g) const {
      auto lhs = concat(f1, g);
      auto rhs = concat(f2, g);
      for (auto const& x : _p.sample_points) {
        if (!(evaluate(lhs, x) == evaluate(rhs, x))) {
          return std::nullopt;
        }
      }
      for (std::size_t i = 0; i < _p.sample_points.size(); ++i) {
        auto const& x = _p.sample_points[i];
        if (!(evaluate(f1, x) == evaluate(f2, x))) {
          return CancellationReport::Counterexample{f1, f2, g, i};
        }
      }
      return std::nullopt;
    }

    Presentation<Point>             _p;
    std::vector<Word>               _words;
    std::vector<std::size_t>        _first;  // _first[len] = index of first word of length len
    std::vector<std::vector<Point>> _images;
    std::vector<std::string>        _keys;
  };

}  // namespace pseudoquotient

#endif  // PSEUDOQUOTIENT_VERIFIER_HPP_
