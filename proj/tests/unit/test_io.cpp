#include <gtest/gtest.h>

#include <filesystem>
#include <functional>
#include <sstream>

#include "brc/error.hpp"
#include "brc/io.hpp"
#include "generators.hpp"

namespace brc {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error";
    return ErrorKind::DecodeFailed;
}

TEST(ParamsIo, RoundTrip) {
    const auto& p = testing::flagship();
    const auto text = format_params(p, 17);
    const auto back = parse_params(text);
    EXPECT_EQ(back.m, 64U);
    EXPECT_EQ(back.w, 15U);
    EXPECT_EQ(back.t, 2U);
    EXPECT_EQ(back.s, 4U);
    EXPECT_EQ(back.seed, std::optional<std::uint64_t>(17));
    ASSERT_TRUE(back.modulus.has_value());
    EXPECT_EQ(*back.modulus, p.field().modulus());
    const auto rebuilt = back.build();
    EXPECT_EQ(rebuilt.n(), p.n());
    EXPECT_EQ(rebuilt.book().markers().size(), p.book().markers().size());
    EXPECT_NE(text.find("\"n\": 3381"), std::string::npos);
    EXPECT_NE(text.find("\"modulus\": \"1002b\""), std::string::npos);
}

TEST(ParamsIo, MinimalFileAndErrors) {
    const auto p = parse_params(R"({"m": 64, "w": 15, "t": 2, "s": 4})");
    EXPECT_FALSE(p.modulus.has_value());
    EXPECT_EQ(p.build().L(), 100U);
    EXPECT_EQ(parse_params(R"({"m": 64, "w": 15, "t": 2, "s": 4, "modulus": "0x1002b"})").modulus->bits, 0x1002bU);
    EXPECT_EQ(kind_of([] { parse_params("{"); }), ErrorKind::Parameter);
    EXPECT_EQ(kind_of([] { parse_params(R"({"m": 64, "w": 15, "t": 2})"); }), ErrorKind::Parameter);
    EXPECT_EQ(kind_of([] { parse_params(R"({"m": -1, "w": 15, "t": 2, "s": 4})"); }), ErrorKind::Parameter);
    EXPECT_EQ(kind_of([] { parse_params(R"({"m": "x", "w": 15, "t": 2, "s": 4})"); }), ErrorKind::Parameter);
    EXPECT_EQ(kind_of([] { parse_params("[1]"); }), ErrorKind::Parameter);
}

TEST(BitstringIo, SkipsCommentsAndBlanks) {
    std::istringstream in("# codeword\n\n  0110  \n111\n");
    EXPECT_EQ(parse_bitstring(in), BitString("0110"));
    std::istringstream empty("# nothing\n");
    EXPECT_EQ(kind_of([&] { parse_bitstring(empty); }), ErrorKind::Parameter);
    std::istringstream bad("01x1\n");
    EXPECT_THROW(parse_bitstring(bad), Error);
}

TEST(FragmentsIo, RoundTrip) {
    testing::Rng rng(5);
    FragmentMultiset f;
    for (int i = 0; i < 20; ++i) f.push_back(testing::random_bits(rng, 1 + testing::below(rng, 50)));
    std::stringstream io;
    write_fragments(io, f);
    EXPECT_EQ(parse_fragments(io), f);
    std::istringstream commented("# two\n01\n\n10\n");
    EXPECT_EQ(parse_fragments(commented), (FragmentMultiset{BitString("01"), BitString("10")}));
}

TEST(ActionIo, RoundTrip) {
    const AdversaryAction a{{1, 5, 9}, {0, 3}, 0xfeedfacecafeULL};
    EXPECT_EQ(parse_action(format_action(a)), a);
    EXPECT_EQ(parse_action(R"({"breaks": [2]})"), (AdversaryAction{{2}, {}, 0}));
    EXPECT_EQ(kind_of([] { parse_action(R"({"breaks": "x"})"); }), ErrorKind::Parameter);
}

TEST(FileIo, MissingFileIsIo) {
    EXPECT_EQ(kind_of([] { read_text_file("/nonexistent/brc/file"); }), ErrorKind::Io);
    EXPECT_EQ(kind_of([] { write_text_file("/nonexistent/brc/file", "x"); }), ErrorKind::Io);
    const auto path = std::filesystem::temp_directory_path() / "brc_io_test.txt";
    write_text_file(path, "hello\n");
    EXPECT_EQ(read_text_file(path), "hello\n");
    std::filesystem::remove(path);
}

}  // namespace
}  // namespace brc
