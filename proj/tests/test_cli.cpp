#include "lchoose/assignment.hpp"
#include "lchoose/graph.hpp"
#include "lchoose/text.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <sys/wait.h>

using namespace lchoose;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(LCHOOSE_CLI) + " " + args + " 2>/dev/null";
    Run r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("lchoose_cli_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp_dir(const fs::path& dir)
{
    std::string all;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files)
        all += f.filename().string() + "\n" + text::read_file(f.string());
    return all;
}

}  // namespace

TEST_CASE("order")
{
    auto r = run("order 2,2 1,1,1,3");
    CHECK(r.status == 0);
    CHECK(r.out.find("true") == 0);
    CHECK(r.out.find("witness=2,4") != std::string::npos);
    CHECK(run("order 1,1 2").status == 1);
    CHECK(run("order 3 3").status == 0);
    CHECK(run("order 1,x 2").status == 2);
    CHECK(run("order 1,1").status == 2);
    CHECK(run("").status == 2);
}

TEST_CASE("choosable and check")
{
    TempDir tmp;
    write_graph_file(tmp.file("k24.graph"), named::complete_bipartite(2, 4));
    write_graph_file(tmp.file("c4.graph"), named::cycle(4));
    write_graph_file(tmp.file("k3.graph"), named::complete(3));

    auto r = run("choosable " + tmp.file("k24.graph") + " 2 --cert " + tmp.file("cert.txt"));
    CHECK(r.status == 1);
    auto witness = parse_assignment(text::read_file(tmp.file("cert.txt")));
    auto k24 = named::complete_bipartite(2, 4);
    CHECK(validate_assignment(k24, witness));
    CHECK_FALSE(l_colour(k24, witness));
    CHECK(run("check " + tmp.file("k24.graph") + " " + tmp.file("cert.txt")).status == 1);

    CHECK(run("choosable " + tmp.file("c4.graph") + " 2").status == 0);
    CHECK(run("choosable " + tmp.file("k3.graph") + " 1,1,1").status == 0);
    CHECK(run("choosable " + tmp.file("k24.graph") + " 1,1").status == 0);
    CHECK(run("choosable " + tmp.file("c4.graph") + " 2 --max-assignments 5").status == 3);
    CHECK(run("choosable " + tmp.file("missing.graph") + " 2").status == 2);
    CHECK(run("choosable " + tmp.file("c4.graph") + " 0").status == 2);

    text::write_file(tmp.file("bad.graph"), "graph 2 1\ne 1 1\n");
    CHECK(run("choosable " + tmp.file("bad.graph") + " 2").status == 2);

    text::write_file(tmp.file("ok.txt"), serialize_assignment(ListAssignment::plain({{1, 2}, {1, 2}, {1, 3}, {2, 3},
                                                                                      {1, 2}, {1, 2}})));
    auto ok = run("check " + tmp.file("k24.graph") + " " + tmp.file("ok.txt"));
    CHECK(ok.status == 0);
    CHECK(ok.out.find("colourable") == 0);
    text::write_file(tmp.file("short.txt"), serialize_assignment(ListAssignment::plain({{1, 2}})));
    CHECK(run("check " + tmp.file("k24.graph") + " " + tmp.file("short.txt")).status == 2);
}

TEST_CASE("certificates are identical across shard counts")
{
    TempDir tmp;
    write_graph_file(tmp.file("k33.graph"), named::complete_bipartite(3, 3));
    CHECK(run("choosable " + tmp.file("k33.graph") + " 2 --shards 1 --cert " + tmp.file("a.txt")).status == 1);
    CHECK(run("choosable " + tmp.file("k33.graph") + " 2 --shards 4 --cert " + tmp.file("b.txt")).status == 1);
    CHECK(text::read_file(tmp.file("a.txt")) == text::read_file(tmp.file("b.txt")));
}

TEST_CASE("gadget")
{
    TempDir tmp;
    CHECK(run("gadget make --part 3 --g 6 --out " + tmp.file("j.graph")).status == 0);
    CHECK(read_graph_file(tmp.file("j.graph")) == named::cycle(7));
    CHECK(text::read_file(tmp.file("j.graph")).find("gadget part=3 g=6") != std::string::npos);
    CHECK(run("gadget verify " + tmp.file("j.graph") + " --part 3 --g 6").status == 0);
    auto bad = run("gadget verify " + tmp.file("j.graph") + " --part 3 --g 8");
    CHECK(bad.status == 1);
    CHECK(bad.out.find("girth_ok=false") != std::string::npos);
    CHECK(run("gadget make --part 4 --g 5").status == 2);
}

TEST_CASE("construct, verify and determinism")
{
    TempDir tmp;
    auto args = " --lambda 1,1 --target 2 --g 5 --eps 0.04 --n 12 --seed 7 --colour-check-cap 100 --out ";
    CHECK(run("construct" + std::string(args) + tmp.file("a")).status == 0);
    CHECK(run("construct" + std::string(args) + tmp.file("b")).status == 0);
    for (auto name : {"params.txt", "base.graph", "labelling.txt", "G.graph", "assignment.txt", "report.txt"})
        CHECK(fs::exists(tmp.path / "a" / name));
    CHECK(slurp_dir(tmp.path / "a") == slurp_dir(tmp.path / "b"));
    auto v = run("verify " + tmp.file("a"));
    CHECK(v.status == 0);
    CHECK(v.out.find("rebuild_matches=true") != std::string::npos);

    auto rejected = run("construct --lambda 2 --target 1,1 --g 5 --eps 0.04 --n 12 --out " + tmp.file("c"));
    CHECK(rejected.status == 2);
    CHECK_FALSE(fs::exists(tmp.path / "c"));
    CHECK(run("construct --lambda 1,1 --target 2 --g 5 --eps 0.04 --n 13 --out " + tmp.file("c")).status == 2);
    CHECK(run("construct --lambda 1,1 --target 2 --g 5 --eps 0.05 --n 12 --out " + tmp.file("c")).status == 2);

    auto multi = run("construct --lambda 1,1,1 --target 1,2 --target 3 --g 4 --eps 0.04 --n 30 --out " +
                     tmp.file("m"));
    CHECK(multi.status == 0);
    CHECK(fs::exists(tmp.path / "m" / "assignment_2.txt"));
    CHECK(run("verify " + tmp.file("m")).status == 0);
    CHECK(run("verify " + tmp.file("nothing")).status == 2);
}

TEST_CASE("mc")
{
    auto cycles = run("mc cycles --k 2 --g 4 --n 50 --trials 4 --seed 3");
    CHECK(cycles.status == 0);
    CHECK(cycles.out.find("# mean=0 max=0") != std::string::npos);
    CHECK(cycles.out == run("mc cycles --k 2 --g 4 --n 50 --trials 4 --seed 3").out);

    auto exp = run("mc expansion --k 3 --g 5 --n 200 --t 4 --trials 5 --samples 50");
    CHECK(exp.status == 0);
    CHECK(exp.out.find("expectation=") != std::string::npos);

    auto bad = run("mc badpairs --k 3 --g 5 --n 40 --r 1 --t 4 --trials 2 --probes 100");
    CHECK(bad.status == 0);
    auto tail = bad.out.substr(bad.out.rfind("# bad_fraction="));
    auto eq1 = tail.find('=') + 1, sp = tail.find(' ', eq1), eq2 = tail.rfind('=') + 1;
    CHECK(tail.substr(eq1, sp - eq1) == tail.substr(eq2, tail.size() - eq2 - 1));
    CHECK(run("mc cycles --k 3 --g 5 --eps 0.06 --n 20").status == 2);
}
