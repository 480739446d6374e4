#include <catch2/catch_amalgamated.hpp>

#include <palinforge/cli.hpp>

#include <sstream>

namespace {

struct cli_result {
    int status = -1;
    std::string out;
    std::string err;
};

cli_result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    cli_result r;
    r.status = palinforge::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("generate prints palindromization images") {
    auto r = run({"generate", "--letters", "abaa"});
    CHECK(r.status == 0);
    CHECK(r.out == "abaabaaba\n");
    CHECK(r.err.empty());

    CHECK(run({"generate", "--letters", "abc"}).out == "abacaba\n");
    CHECK(run({"generate", "--code", "ab,ba", "--tokens", "ab,ba,ab"}).out == "ababaababa\n");

    auto fib = run({"generate", "--code", "ab,ba", "--preamble", "ab", "--period", "ab,ba",
                    "--length", "13"});
    CHECK(fib.status == 0);
    CHECK(fib.out == "abaababaabaab\n");

    auto xar = run({"generate", "--code", "aa,ab,b", "--period", "ab,b,aa", "--length", "39"});
    CHECK(xar.out == "ababaaababaababaaabababaaababaababaaaba\n");
}

TEST_CASE("generate inverts images and reports fullness") {
    CHECK(run({"generate", "--invert", "abaabaaba"}).out == "abaa\n");

    auto bad = run({"generate", "--invert", "abab"});
    CHECK(bad.status == 2);
    CHECK(bad.err == "error: word is not a letter palindromization image\n");
    CHECK(bad.out.empty());

    auto full = run({"generate", "--code", "aa,ab,b", "--tokens", "ab,b,aa", "--full"});
    CHECK(full.status == 0);
    CHECK(full.out == "full=true\nlast[aa]=3\nlast[ab]=1\nlast[b]=2\n");

    auto partial = run({"generate", "--code", "aa,ab,b", "--tokens", "ab", "--full"});
    CHECK(partial.status == 0);
    CHECK(partial.out.starts_with("full=false\nfailed=F1\n"));
}

TEST_CASE("generate continues a full prefix through the seed identity") {
    auto r = run({"generate", "--code", "aa,ab,b", "--tokens", "ab,b,aa", "--extend", "b",
                  "--mu", "a=ab,b=b,c=aa"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "continued=ababaaabababaaababa\n"
          "reconstructed=ababaaabababaaababa\n"
          "equal=true\n");
}

TEST_CASE("factorize modes") {
    auto r = run({"factorize", "--code", "ab,ba", "--word", "abbaab"});
    CHECK(r.status == 0);
    CHECK(r.out == "ab,ba,ab\n");

    auto bad = run({"factorize", "--code", "ab,ba", "--word", "bab"});
    CHECK(bad.status == 2);
    CHECK(bad.err == "error: word is not in the star of the code\n");

    auto st = run({"factorize", "--code", "a,ba,bb", "--word", "abaababa", "--stream"});
    CHECK(st.status == 0);
    CHECK(st.out == "tokens=a,ba,a,ba,ba\nresidual=\ncommitted=8\n");
}

TEST_CASE("check-code classification lines") {
    auto r = run({"check-code", "--code", "ab,ba"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "is_code=true\n"
          "prefix=true\n"
          "suffix=true\n"
          "bifix=true\n"
          "infix=true\n"
          "weakly_overlap_free=false\n"
          "maximal_prefix=false\n"
          "delay=0\n");

    auto amb = run({"check-code", "--code", "a,ab,b"});
    CHECK(amb.status == 0);
    CHECK(amb.out.starts_with("is_code=false\nwitness=ab\n"));

    auto max = run({"check-code", "--code", "a,ba,bb"});
    CHECK(max.out.find("maximal_prefix=true\nlambda=2\ndelay=0\n") != std::string::npos);

    CHECK(run({"check-code", "--code", "ab,aba"}).out.find("delay=1\n") != std::string::npos);
    CHECK(run({"check-code", "--code", "a,ab,bb"}).out.find("delay=infinite\n") !=
          std::string::npos);
    CHECK(run({"check-code", "--code", "aa,ba,baa"}).out.find("delay=>=5\n") !=
          std::string::npos);
}

TEST_CASE("check-conservative verdicts") {
    auto refuted = run({"check-conservative", "--code", "ab,ba"});
    CHECK(refuted.status == 0);
    CHECK(refuted.out == "kind=not-conservative\ndepth=4\nwitness=ab\nimage=aba\n");

    auto proved = run({"check-conservative", "--code", "bab,bcb"});
    CHECK(proved.out ==
          "kind=proved-conservative\ndepth=4\nrule=palindromic infix weakly-overlap-free code\n");

    auto bounded = run({"check-conservative", "--code", "aa,bb"});
    CHECK(bounded.out == "kind=conservative-up-to\ndepth=4\n");

    auto morphic = run({"check-conservative", "--phi", "a=c,b=bab"});
    CHECK(morphic.out ==
          "kind=proved-conservative\n"
          "depth=4\n"
          "image_palindromic=true\n"
          "image_prefix=true\n"
          "image_conservativity=proved-conservative\n");

    auto swapped = run({"check-conservative", "--phi", "a=ab,b=ba"});
    CHECK(swapped.out ==
          "kind=not-conservative\n"
          "depth=4\n"
          "witness=a\n"
          "lhs=ab\n"
          "rhs=aba\n"
          "image_palindromic=false\n"
          "image_prefix=true\n"
          "image_conservativity=not-conservative\n");
}

TEST_CASE("check-conservative weak witnesses") {
    auto ok = run({"check-conservative", "--code", "aa,bb", "--period", "aa,bb", "--weak",
                   "--length", "8"});
    CHECK(ok.status == 0);
    CHECK(ok.out == "consistent=true\ndelay_used=0\ntoken_count=4\ncovered=8\ntail=\n");

    auto broken = run({"check-conservative", "--code", "ab,ba", "--preamble", "ab,ab",
                       "--period", "ab,ba", "--weak", "--length", "60"});
    CHECK(broken.status == 0);
    CHECK(broken.out == "consistent=false\ndelay_used=0\ninconsistent_at=2\n");
}

TEST_CASE("check-conservative morphic image of a letter-recurrent stream") {
    auto r = run({"check-conservative", "--code", "aa,ab,b", "--period", "ab,b,aa", "--image",
                  "--length", "39", "--digits", "abc"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "z=ab,b,aa\n"
          "full_at=3\n"
          "mu[a]=ab\n"
          "mu[b]=b\n"
          "mu[c]=aa\n"
          "phi[a]=ababaaababa\n"
          "phi[b]=ababaaab\n"
          "phi[c]=ababaa\n"
          "prefix=ababaaababaababaaabababaaababaababaaaba\n"
          "digit_word=aacaacbacaaacaacbaca\n"
          "reconstruction_ok=true\n");
}

TEST_CASE("theta-generate closures") {
    CHECK(run({"theta-generate", "--close", "abacabc", "--theta", "a<->b,c"}).out ==
          "abacabcbab\n");
    CHECK(run({"theta-generate", "--close", "a", "--theta", "a<->b"}).out == "ab\n");
    CHECK(run({"theta-generate", "--close", "ab"}).out == "aba\n");
    CHECK(run({"theta-generate", "--letters", "aab", "--theta", "a<->b"}).out ==
          "ababbaabab\n");
    CHECK(run({"theta-generate", "--code", "ab,ba,c", "--tokens", "ab,c,ba", "--theta",
               "a<->b,c"}).out == "abcabbaabcab\n");
    CHECK(run({"theta-generate", "--mu-of", "aab", "--theta", "a<->b"}).out == "ababba\n");
}

TEST_CASE("token schemes for classical words") {
    auto tm1 = run({"thue-morse", "--n", "1"});
    CHECK(tm1.status == 0);
    CHECK(tm1.out == "tokens=a,bb\nword=abba\n");

    auto tm2 = run({"thue-morse", "--n", "2"});
    CHECK(tm2.out == "tokens=a,bb,baabb\nword=abbabaabbaababba\n");

    CHECK(run({"sturmian-encode", "--letters", "ababab"}).out == "ab,ab,ba,ab,ba\n");
    CHECK(run({"sturmian-encode", "--decode", "aa,ab,ba,ab"}).out == "aaabba\n");
}

TEST_CASE("analyze word report") {
    auto r = run({"analyze", "--report", "word", "--word", "ababaaababa", "--block", "b"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "lps=ababaaababa\n"
          "closure=ababaaababa\n"
          "min_period=6\n"
          "primitive=true\n"
          "rich=true\n"
          "delta=aba\n"
          "step=ababaaabababaaababa\n");
}

TEST_CASE("analyze factor reports") {
    auto gaps = run({"analyze", "--report", "gaps", "--word", "abaababa", "--factor", "aba"});
    CHECK(gaps.status == 0);
    CHECK(gaps.out == "positions=0,3,5\ngaps=3,2\n");

    auto spec = run({"analyze", "--report", "special", "--word", "abacabaabacaba", "--n", "1",
                     "--side", "right"});
    CHECK(spec.status == 0);
    CHECK(spec.out == "a abc\ncount=1\n");

    auto prof = run({"analyze", "--report", "profile", "--word", "aaaa", "--format", "csv"});
    CHECK(prof.status == 0);
    CHECK(prof.out == "n,p\n0,1\n1,1\n2,1\n3,1\n4,1\n");

    auto rec = run({"analyze", "--report", "recurrence", "--word", "abaababaabaababaababa",
                    "--factor", "aba", "--code", "a,b"});
    CHECK(rec.status == 0);
    CHECK(rec.out.starts_with("count="));
    CHECK(rec.out.find("within=true\n") != std::string::npos);

    auto alt = run({"analyze", "--report", "alternating", "--code", "aa,ab,b", "--period",
                    "ab,b,aa"});
    CHECK(alt.out == "alternating=true\nletter_recurrent=true\n");

    auto notmax = run({"analyze", "--report", "alternating", "--code", "ab,ba", "--preamble",
                       "ab", "--period", "ab,ba"});
    CHECK(notmax.out == "alternating=true\nletter_recurrent=not-applicable\n");
}

TEST_CASE("analyze growth bounds") {
    auto r = run({"analyze", "--report", "bounds", "--code", "a,b", "--period", "a,b",
                  "--prefix-len", "400", "--n-range", "5..30"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "prefix_len=400\n"
          "lambda=1\n"
          "n0=3\n"
          "lower_ok_from=1\n"
          "slope_ok=true\n"
          "upper_ok=true\n"
          "strictly_increasing=true\n"
          "balance_ok=true\n"
          "exponent=1\n"
          "gap_bound_ok=true\n");

    auto csv = run({"analyze", "--report", "bounds", "--code", "a,b", "--period", "a,b",
                    "--prefix-len", "200", "--n-range", "1..5", "--format", "csv"});
    CHECK(csv.status == 0);
    CHECK(csv.out == "n,p,sr\n0,1,1\n1,2,1\n2,3,1\n3,4,1\n4,5,1\n5,6,1\n");
}

TEST_CASE("json output is machine-readable") {
    auto gen = run({"generate", "--letters", "abc", "--json"});
    CHECK(gen.status == 0);
    auto j = palinforge::ordered_json::parse(gen.out);
    CHECK(j["word"] == "abacaba");

    auto chk = run({"check-code", "--code", "ab,ba", "--json"});
    auto jc = palinforge::ordered_json::parse(chk.out);
    CHECK(jc["is_code"] == true);
    CHECK(jc["prefix"] == true);
    CHECK(jc.contains("delay"));

    auto con = run({"check-conservative", "--code", "ab,ba", "--json"});
    auto jv = palinforge::ordered_json::parse(con.out);
    CHECK(jv["kind"] == "not-conservative");
    CHECK(jv["witness"] == std::vector<std::string>{"ab"});
    CHECK(jv["image"] == "aba");
}

TEST_CASE("exit codes distinguish usage and domain errors") {
    auto verb = run({"frobnicate"});
    CHECK(verb.status == 64);
    CHECK(verb.err.starts_with("usage error:"));

    CHECK(run({}).status == 64);
    CHECK(run({"generate"}).status == 64);
    CHECK(run({"factorize", "--code", "ab,ba"}).status == 64);
    CHECK(run({"generate", "--letters", "ab", "--bogus"}).status == 64);
    CHECK(run({"analyze", "--report", "frob", "--word", "a"}).status == 64);
    CHECK(run({"analyze", "--report", "word", "--word", "a", "--format", "yaml"}).status == 64);
    CHECK(run({"theta-generate", "--close", "ab", "--theta", "zz"}).status == 64);
    CHECK(run({"analyze", "--report", "bounds", "--code", "a,b", "--period", "a,b"}).status ==
          64);

    auto csvbad = run({"analyze", "--report", "word", "--word", "aba", "--format", "csv"});
    CHECK(csvbad.status == 2);
    CHECK(csvbad.err == "error: csv output is limited to tabular reports\n");

    CHECK(run({"check-code", "--code", ""}).status == 64);
    CHECK(run({"sturmian-encode", "--letters", "abc"}).status == 2);
    CHECK(run({"generate", "--code", "aa", "--period", "ab", "--length", "5"}).status == 2);
}

TEST_CASE("repeated invocations are byte-identical") {
    std::vector<std::string> image = {"check-conservative", "--code", "aa,ab,b", "--period",
                                      "ab,b,aa", "--image", "--length", "39", "--digits", "abc"};
    auto a = run(image);
    auto b = run(image);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    std::vector<std::string> bounds = {"analyze", "--report", "bounds", "--code", "aa,ab,b",
                                       "--period", "ab,b,aa", "--prefix-len", "600",
                                       "--n-range", "5..40"};
    auto c = run(bounds);
    auto d = run(bounds);
    CHECK(c.status == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("help exits cleanly") {
    auto r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("palindromization toolkit") != std::string::npos);
    CHECK(r.out.find("generate") != std::string::npos);
}
