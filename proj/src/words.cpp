#include "isocover/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isocover {

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::g0:
      return "g0";
    case Gen::g1:
      return "g1";
    case Gen::gt:
      return "gt";
    case Gen::glambda:
      return "glambda";
    case Gen::ginf:
      return "ginf";
    case Gen::alpha:
      return "alpha";
    case Gen::beta:
      return "beta";
    case Gen::delta1:
      return "delta1";
    case Gen::delta2:
      return "delta2";
  }
  throw std::invalid_argument("unknown generator");
}

bool is_five_letter(Gen g) {
  return g == Gen::g0 || g == Gen::g1 || g == Gen::gt || g == Gen::glambda ||
         g == Gen::ginf;
}

bool is_torus_letter(Gen g) { return !is_five_letter(g); }

bool is_involutive(Gen g) {
  return g == Gen::g0 || g == Gen::g1 || g == Gen::glambda || g == Gen::ginf;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->gen, -it->exponent});
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen &&
        out.back().exponent + l.exponent == 0) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word reduce(const Word& w) {
  Word out;
  for (Letter l : w) {
    if (is_involutive(l.gen)) {
      l.exponent = 1;  // g^-1 = g projectively
    }
    bool cancels = !out.empty() && out.back().gen == l.gen &&
                   (is_involutive(l.gen) ||
                    out.back().exponent + l.exponent == 0);
    if (cancels) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

namespace {

Word letter_image(Gen g) {
  switch (g) {
    case Gen::alpha:
      return {{Gen::g1, 1}, {Gen::gt, 1}, {Gen::glambda, 1}};
    case Gen::beta:
      return {{Gen::glambda, 1}, {Gen::ginf, 1}};
    case Gen::delta1:
      return {{Gen::gt, 1}};
    case Gen::delta2:
      return {{Gen::ginf, 1}, {Gen::gt, 1}, {Gen::ginf, -1}};
    default:
      throw std::domain_error("the embedding is defined on torus letters, not " +
                              gen_name(g));
  }
}

}  // namespace

Word phi_star(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    Word image = letter_image(l.gen);
    if (l.exponent == -1) {
      image = inverse_word(image);
    }
    out.insert(out.end(), image.begin(), image.end());
  }
  return out;
}

Word involution(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    switch (l.gen) {
      case Gen::alpha:
      case Gen::beta:
        out.push_back({l.gen, -l.exponent});
        break;
      case Gen::delta1:
        out.push_back({Gen::delta2, l.exponent});
        break;
      case Gen::delta2:
        out.push_back({Gen::delta1, l.exponent});
        break;
      default:
        throw std::domain_error(
            "the involution is defined on torus letters, not " +
            gen_name(l.gen));
    }
  }
  return out;
}

int involutive_letter_count(const Word& w) {
  return static_cast<int>(
      std::count_if(w.begin(), w.end(),
                    [](const Letter& l) { return is_involutive(l.gen); }));
}

Mat2 eval_word(const Word& w, const std::map<Gen, Mat2>& assignment) {
  Mat2 out = Mat2::identity();
  bool first = true;
  for (const Letter& l : w) {
    auto it = assignment.find(l.gen);
    if (it == assignment.end()) {
      throw std::domain_error("no matrix assigned to generator " +
                              gen_name(l.gen));
    }
    Mat2 m = l.exponent == 1 ? it->second : inverse(it->second);
    out = first ? m : out * m;
    first = false;
  }
  return out;
}

std::map<Gen, Mat2> assignment_from(const FivePuncturedRep& rep) {
  return {{Gen::g0, rep.m0},
          {Gen::g1, rep.m1},
          {Gen::gt, rep.mt},
          {Gen::glambda, rep.mlambda},
          {Gen::ginf, rep.minf}};
}

std::map<Gen, Mat2> assignment_from(const TorusTwoRep& rep) {
  return {{Gen::alpha, rep.a},
          {Gen::beta, rep.b},
          {Gen::delta1, rep.d1},
          {Gen::delta2, rep.d2}};
}

std::string to_text(const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) {
      out += ' ';
    }
    out += gen_name(l.gen);
    if (l.exponent == -1) {
      out += "^-1";
    }
  }
  return out;
}

Word parse_word(const std::string& text) {
  static const Gen all[] = {Gen::g0,    Gen::g1,   Gen::gt,
                            Gen::glambda, Gen::ginf, Gen::alpha,
                            Gen::beta,  Gen::delta1, Gen::delta2};
  Word out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::string name = token;
    int exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string exp = token.substr(caret + 1);
      if (exp == "1") {
        exponent = 1;
      } else if (exp == "-1") {
        exponent = -1;
      } else {
        throw std::invalid_argument("bad exponent in word token: " + token);
      }
    }
    bool found = false;
    for (Gen g : all) {
      if (gen_name(g) == name) {
        out.push_back({g, exponent});
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("unknown generator in word token: " + token);
    }
  }
  return out;
}

Word torus_relation_word() {
  Word tail = inverse_word({{Gen::delta1, 1},
                            {Gen::beta, 1},
                            {Gen::alpha, 1},
                            {Gen::delta2, 1}});
  return concat({{Gen::alpha, 1}, {Gen::beta, 1}}, tail);
}

Word five_relation_word() {
  return {{Gen::g0, 1},
          {Gen::g1, 1},
          {Gen::gt, 1},
          {Gen::glambda, 1},
          {Gen::ginf, 1}};
}

}  // namespace isocover
