#pragma once

#include <string>
#include <vector>

namespace golden {

struct LabelledMatrix {
    std::string shape;
    std::vector<std::string> columns;  // tableau rows separated by '/'
    std::vector<std::vector<std::string>> rows;
};

// Symmetric group transition matrices as displayed, with their own column order.
inline const std::vector<LabelledMatrix>& symmetric_matrices() {
    static const std::vector<LabelledMatrix> data = {
        {"2,1",
         {"13/2", "12/3"},
         {
             {"1", "1/2"},
             {"0", "3/2"},
         }},
        {"3,1",
         {"134/2", "124/3", "123/4"},
         {
             {"1", "1/2", "1/2"},
             {"0", "3/2", "1/2"},
             {"0", "0", "2"},
         }},
        {"2,2",
         {"13/24", "12/34"},
         {
             {"1", "1/2"},
             {"0", "3/2"},
         }},
        {"2,1,1",
         {"14/2/3", "13/2/4", "12/3/4"},
         {
             {"1", "1/3", "-1/3"},
             {"0", "4/3", "2/3"},
             {"0", "0", "2"},
         }},
        {"4,1",
         {"1345/2", "1245/3", "1235/4", "1234/5"},
         {
             {"1", "1/2", "1/2", "1/2"},
             {"0", "3/2", "1/2", "1/2"},
             {"0", "0", "2", "1/2"},
             {"0", "0", "0", "5/2"},
         }},
        {"3,2",
         {"135/24", "125/34", "134/25", "124/35", "123/45"},
         {
             {"1", "1/2", "1/2", "1/4", "-1/4"},
             {"0", "3/2", "0", "3/4", "3/4"},
             {"0", "0", "3/2", "3/4", "3/4"},
             {"0", "0", "0", "9/4", "3/4"},
             {"0", "0", "0", "0", "3"},
         }},
        {"3,1,1",
         {"145/2/3", "135/2/4", "125/3/4", "134/2/5", "124/3/5", "123/4/5"},
         {
             {"1", "1/3", "-1/3", "1/3", "-1/3", "0"},
             {"0", "4/3", "2/3", "1/3", "1/6", "-1/2"},
             {"0", "0", "2", "0", "1/2", "-1/2"},
             {"0", "0", "0", "5/3", "5/6", "5/6"},
             {"0", "0", "0", "0", "5/2", "5/6"},
             {"0", "0", "0", "0", "0", "10/3"},
         }},
        {"2,2,1",
         {"14/25/3", "13/25/4", "12/35/4", "13/24/5", "12/34/5"},
         {
             {"1", "1/3", "-1/3", "-1/3", "1/3"},
             {"0", "4/3", "2/3", "2/3", "1/3"},
             {"0", "0", "2", "0", "1"},
             {"0", "0", "0", "2", "1"},
             {"0", "0", "0", "0", "3"},
         }},
        {"2,1,1,1",
         {"15/2/3/4", "14/2/3/5", "13/2/4/5", "12/3/4/5"},
         {
             {"1", "1/4", "-1/4", "1/4"},
             {"0", "5/4", "5/12", "-5/12"},
             {"0", "0", "5/3", "5/6"},
             {"0", "0", "0", "5/2"},
         }},
        {"3,2,1",
         {"146/25/3", "136/25/4", "145/26/3", "126/35/4", "136/24/5", "135/26/4", "126/34/5", "125/36/4", "135/24/6", "134/26/5", "125/34/6", "124/36/5", "134/25/6", "124/35/6", "123/46/5", "123/45/6"},
         {
             {"1", "1/3", "1/2", "-1/3", "-1/3", "1/6", "1/3", "-1/6", "-1/6", "-1/6", "1/6", "1/6", "1/6", "-1/6", "1/6", "1/12"},
             {"0", "4/3", "0", "2/3", "2/3", "2/3", "1/3", "1/3", "1/3", "1/3", "1/6", "1/6", "5/12", "5/24", "1/6", "-7/24"},
             {"0", "0", "3/2", "0", "0", "1/2", "0", "-1/2", "-1/2", "1/2", "1/2", "-1/2", "-1/2", "1/2", "0", "1/4"},
             {"0", "0", "0", "2", "0", "0", "1", "1", "0", "0", "1/2", "1/2", "0", "5/8", "-1/2", "-5/8"},
             {"0", "0", "0", "0", "2", "0", "1", "0", "1/2", "1", "1/4", "1/2", "1/4", "1/8", "-1/2", "-1/8"},
             {"0", "0", "0", "0", "0", "2", "0", "1", "1", "1/2", "1/2", "1/4", "1/4", "1/8", "-3/4", "5/8"},
             {"0", "0", "0", "0", "0", "0", "3", "0", "0", "0", "3/4", "3/2", "0", "3/8", "3/2", "3/8"},
             {"0", "0", "0", "0", "0", "0", "0", "3", "0", "0", "3/2", "3/4", "0", "3/8", "-3/4", "-3/8"},
             {"0", "0", "0", "0", "0", "0", "0", "0", "5/2", "0", "5/4", "0", "5/4", "5/8", "0", "-5/8"},
             {"0", "0", "0", "0", "0", "0", "0", "0", "0", "5/2", "0", "5/4", "5/4", "5/8", "5/4", "5/8"},
             {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "15/4", "0", "0", "15/8", "0", "15/8"},
             {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "15/4", "0", "15/8", "5/4", "5/8"},
             {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "15/4", "15/8", "0", "15/8"},
             {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "45/8", "0", "15/8"},
             {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "5", "5/2"},
             {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "15/2"},
         }},
    };
    return data;
}

}  // namespace golden
