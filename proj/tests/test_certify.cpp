#include <doctest.h>

#include "latcert/certify.hpp"
#include "latcert/characteristic.hpp"
#include "latcert/decide.hpp"
#include "latcert/instances.hpp"

using namespace latcert;

TEST_CASE("verify_yes pinned examples") {
    GramMatrix I2 = validate_gram(IntMatrix::identity(2));
    CHECK(verify_yes(I2, YesCertificate{IntMatrix::identity(2)}));

    GramMatrix G = validate_gram(IntMatrix::from_rows({{1, 1}, {1, 2}}));
    CHECK(verify_yes(G, YesCertificate{IntMatrix::from_rows({{1, 1}, {0, 1}})}));
    CHECK_FALSE(verify_yes(G, YesCertificate{IntMatrix::identity(2)}));
}

TEST_CASE("verify_yes error paths") {
    GramMatrix I2 = validate_gram(IntMatrix::identity(2));
    CHECK_THROWS_AS(verify_yes(I2, YesCertificate{IntMatrix::identity(3)}),
                    DimensionMismatchError);
    // an entry with square above max G_ii cannot appear in any U with UtU = G
    CHECK_THROWS_AS(verify_yes(I2, YesCertificate{IntMatrix::from_rows({{2, 0}, {0, 1}})}),
                    EntryBoundViolatedError);
    // det check: singular matrix within the entry bound
    CHECK_FALSE(verify_yes(I2, YesCertificate{IntMatrix::from_rows({{1, 1}, {1, 1}})}));
}

TEST_CASE("verify_no pinned examples") {
    CHECK(verify_no(e8_gram(), NoCertificate{IntVector(8, mpz_class(0))}));

    GramMatrix I3 = validate_gram(IntMatrix::identity(3));
    // norm 3 < 3 fails: the standard lattice attains exactly n
    CHECK_FALSE(verify_no(I3, NoCertificate{IntVector(3, mpz_class(1))}));
    // not characteristic at all
    CHECK_FALSE(verify_no(I3, NoCertificate{IntVector(3, mpz_class(0))}));

    CHECK_THROWS_AS(verify_no(I3, NoCertificate{IntVector(2, mpz_class(1))}),
                    DimensionMismatchError);
}

TEST_CASE("certificate_size_ok") {
    GramMatrix I3 = validate_gram(IntMatrix::identity(3));
    CHECK(certificate_size_ok(I3, NoCertificate{IntVector(3, mpz_class(1))}));  // 3 <= 3^4

    CHECK(certificate_size_ok(e8_gram(), NoCertificate{IntVector(8, mpz_class(0))}));

    GramMatrix I2 = validate_gram(IntMatrix::identity(2));
    NoCertificate huge{IntVector{mpz_class(1000000), mpz_class(0)}};
    CHECK_FALSE(certificate_size_ok(I2, huge));  // 10^12 > (2*1)^3
}

TEST_CASE("soundness exclusivity on generated instances") {
    // never do both a yes-witness and a short characteristic vector verify
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        int n = 2 + static_cast<int>(seed % 5);
        YesInstance inst = yes_instance(n, seed);
        CHECK(verify_yes(inst.G, YesCertificate{inst.witness}));
        MinCharacteristic m = min_characteristic(inst.G);
        CHECK_FALSE(verify_no(inst.G, NoCertificate{m.z}));
    }
    GramMatrix e8 = e8_gram();
    CHECK(verify_no(e8, NoCertificate{IntVector(8, mpz_class(0))}));
    Decision d = decide_hkz(e8);
    CHECK(d.answer == Answer::kNo);
}

TEST_CASE("certificate transport under congruence disguise") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        int n = 2 + static_cast<int>(seed % 4);
        YesInstance inst = yes_instance(n, seed);
        IntMatrix V = random_unimodular(n, seed + 1000, 2, 12);
        GramMatrix disguised = GramMatrix::spd(congruence(V, inst.G.mat()));
        CHECK(verify_yes(disguised, YesCertificate{mat_mul(inst.witness, V)}));
    }
}

TEST_CASE("certificate document round trip") {
    YesCertificate yes{IntMatrix::from_rows({{1, 1}, {0, 1}})};
    std::string ydoc = write_certificate(Certificate{yes});
    CHECK(ydoc == "answer: yes\nn: 2\nU:\n1 1\n0 1\n");
    Certificate yparsed = parse_certificate_string(ydoc);
    CHECK(std::get<YesCertificate>(yparsed).U == yes.U);

    NoCertificate no{IntVector{mpz_class(0), mpz_class(-3), mpz_class(12)}};
    std::string ndoc = write_certificate(Certificate{no});
    CHECK(ndoc == "answer: no\nn: 3\nz:\n0 -3 12\n");
    Certificate nparsed = parse_certificate_string(ndoc);
    CHECK(std::get<NoCertificate>(nparsed).z == no.z);
}

TEST_CASE("certificate parser accepts comments and rejects junk") {
    Certificate c = parse_certificate_string(
        "# produced elsewhere\nanswer: no\nn: 2\nz:\n1 1  # trailing comment\n");
    CHECK(std::get<NoCertificate>(c).z == IntVector{mpz_class(1), mpz_class(1)});

    CHECK_THROWS_AS(parse_certificate_string("answer: maybe\nn: 2\nz:\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate_string("answer: no\nn: 2\nz:\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate_string("answer: no\nn: 2\nz:\n1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate_string("answer: no\nn: 2\nz:\n1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate_string(""), ParseError);

    try {
        parse_certificate_string("answer: no\nn: 2\nU:\n1 0\n0 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}
