#include <doctest.h>

#include "nw/textio.hpp"

using namespace nw;

TEST_CASE("parse preset document") {
  Document doc = parse_document(
      "# a knot\n"
      "@preset alpha_star\n"
      "@letters A:a+ B:b+ C:a+\n"
      "@phrase ABCABC\n");
  CHECK(doc.data.name() == "alpha_star");
  CHECK(doc.phrase.letter_count() == 3);
  CHECK(doc.phrase.word_count() == 1);
  CHECK(doc.phrase.proj[0] == doc.data.symbol("a+"));
  CHECK(doc.phrase.proj[1] == doc.data.symbol("b+"));
  CHECK(validate(doc.phrase, doc.data).ok());
}

TEST_CASE("multi-word and empty words") {
  Document doc = parse_document("@preset alpha_0\n@letters A:a B:b\n@phrase AB BA\n");
  CHECK(doc.phrase.word_count() == 2);
  Document doc2 = parse_document("@preset alpha_star\n@phrase - -\n");
  CHECK(doc2.phrase.word_count() == 2);
  CHECK(doc2.phrase.words[0].empty());
  CHECK(doc2.phrase.letter_count() == 0);
  Document doc3 = parse_document("@preset alpha_star\n@phrase\n");
  CHECK(doc3.phrase.word_count() == 0);
}

TEST_CASE("continuation lines append") {
  Document doc = parse_document(
      "@preset alpha_0\n"
      "@letters A:a\n"
      "@letters B:b\n"
      "@phrase AB\n"
      "@phrase BA\n");
  CHECK(doc.phrase.word_count() == 2);
  CHECK(doc.phrase.letter_count() == 2);
  CHECK(validate(doc.phrase, doc.data).ok());
}

TEST_CASE("dotted words and custom alphabets") {
  Document doc = parse_document(
      "@alphabet a b\n"
      "@tau a:b\n"
      "@triples (a,a,a) (b,b,b)\n"
      "@shift a:b\n"
      "@letters X1:a X2:b\n"
      "@phrase X1.X2.X1.X2\n");
  CHECK(doc.data.size() == 2);
  CHECK(doc.data.has_shift());
  CHECK(doc.data.admissible());
  CHECK(doc.phrase.words[0].size() == 4);

  std::string round = serialize_document(doc);
  Document again = parse_document(round);
  CHECK(canonical_key(again.phrase) == canonical_key(doc.phrase));
  CHECK(again.data == doc.data);
}

TEST_CASE("serialize round trip on canonical forms") {
  Document doc = parse_document(
      "@preset alpha_star\n@letters A:a+ B:b+ C:a+\n@phrase ABCABC\n");
  Document canon{doc.data, canonical_form(doc.phrase)};
  std::string text = serialize_document(canon);
  Document back = parse_document(text);
  CHECK(back.phrase == canon.phrase);
  CHECK(serialize_document(back) == text);
}

TEST_CASE("json mirror") {
  Document doc = parse_document(
      "@preset alpha_star\n@letters A:a+ B:b+ C:a+\n@phrase ABCABC -\n");
  std::string js = document_json(doc).dump();
  Document back = parse_document(js);
  CHECK(back.data == doc.data);
  CHECK(canonical_key(back.phrase) == canonical_key(doc.phrase));
  CHECK(back.phrase.word_count() == 2);

  Document custom = parse_document(
      "@alphabet p q\n@tau p:q\n@triples (p,p,p)\n@letters A:p\n@phrase AA\n");
  Document back2 = parse_document(document_json(custom).dump());
  CHECK(back2.data == custom.data);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_document("@preset alpha_star\n@bogus x\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 1);
  }
  try {
    parse_document("@alphabet a b\n@tau ab\n@phrase\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_document("@alphabet a\n@triples (a,a\n@phrase\n"), parse_error);
  CHECK_THROWS_AS(parse_document("@phrase AA\n"), parse_error);  // no alphabet
  CHECK_THROWS_AS(parse_document("@preset alpha_star\n@alphabet a\n@phrase\n"),
                  parse_error);
}

TEST_CASE("semantic problems go to validate, not the parser") {
  // unknown symbol and undeclared letter parse fine; validate reports them
  Document doc =
      parse_document("@preset alpha_0\n@letters A:nope\n@phrase AB AB\n");
  auto rep = validate(doc.phrase, doc.data);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("gauss code parsing") {
  SignedGaussCode code = parse_gauss("@gausscode O1+ U2+ O3+ U1+ O2+ U3+\n");
  REQUIRE(code.size() == 1);
  REQUIRE(code[0].size() == 6);
  CHECK(code[0][0].label == "1");
  CHECK(code[0][0].over);
  CHECK(code[0][0].sign == 1);
  CHECK(validate_code(code).ok());

  SignedGaussCode two = parse_gauss("@gausscode /\n");
  CHECK(two.size() == 2);
  CHECK(two[0].empty());

  SignedGaussCode json_code =
      parse_gauss("{\"gausscode\": [[\"O1+\", \"U1-\"]]}");
  CHECK(json_code[0].size() == 2);
  CHECK_FALSE(validate_code(json_code).ok());  // sign mismatch

  CHECK_THROWS_AS(parse_gauss("@gausscode X1+\n"), parse_error);
  CHECK_THROWS_AS(parse_gauss("@gausscode O1*\n"), parse_error);
  CHECK(serialize_gauss(code) == "@gausscode O1+ U2+ O3+ U1+ O2+ U3+\n");
}

TEST_CASE("parsers reject garbage without crashing") {
  // deterministic byte soup, plus truncations of valid inputs
  std::uint64_t state = 0x243F6A8885A308D3ULL;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  const std::string charset = "@aAbB+-:(),./123 \t\n#{}[]\"pretslx=kmoi";
  for (int trial = 0; trial < 300; ++trial) {
    std::string soup;
    int len = static_cast<int>(next() % 60);
    for (int i = 0; i < len; ++i) soup += charset[next() % charset.size()];
    for (auto parse : {+[](const std::string& s) { parse_document(s); },
                       +[](const std::string& s) { parse_gauss(s); },
                       +[](const std::string& s) { parse_kei(s); }}) {
      try {
        parse(soup);
      } catch (const error&) {
        // fine: rejected with a typed error
      }
    }
  }
  const std::string valid =
      "@preset alpha_star\n@letters A:a+ B:b+ C:a+\n@phrase ABCABC\n";
  for (size_t cut = 0; cut < valid.size(); ++cut) {
    try {
      parse_document(valid.substr(0, cut));
    } catch (const error&) {
    }
  }
}

TEST_CASE("kei file round trip") {
  FiniteKei k = dihedral_kei(3);
  std::string text = serialize_kei(k);
  FiniteKei back = parse_kei(text);
  CHECK(back.m == 3);
  CHECK(back.alpha == k.alpha);
  CHECK(back.act == k.act);
  CHECK(back.op == k.op);
  CHECK(validate_kei(back).empty());
  CHECK_THROWS_AS(parse_kei("@act + 0 1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_kei("@kei m=x symbols=+\n"), parse_error);
  CHECK_THROWS_AS(parse_kei("@kei m=-3 symbols=+\n"), parse_error);
  CHECK_THROWS_AS(parse_kei("@kei m=99999999999999999999 symbols=+\n"), parse_error);
  CHECK_THROWS_AS(parse_kei("@kei m=1 symbols=+ tau=+:-\n"), parse_error);
  CHECK_THROWS_AS(parse_kei("@kei m=2 symbols=+\n@act + 0 oops\n"), parse_error);
  CHECK_THROWS_AS(parse_kei("@kei m=2 symbols=+\n@op +\n0 1\n"), parse_error);
}
